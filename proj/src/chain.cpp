#include "samplecheck/chain.hpp"

#include <algorithm>

#include "samplecheck/error.hpp"

namespace samplecheck {

namespace {

// Prefix scan: OR connectors extend the running disjunction P, AND connectors
// close a clause P ∪ {a_j}; the last literal closes P ∪ {a_m}.
std::vector<Clause> prefix_scan_cnf(std::span<const Literal> lits,
                                    std::span<const Connector> conns) {
  std::vector<Clause> out;
  std::vector<Literal> prefix;
  for (std::size_t j = 0; j + 1 < lits.size(); ++j) {
    if (conns[j] == Connector::Or) {
      prefix.push_back(lits[j]);
    } else {
      auto clause = prefix;
      clause.push_back(lits[j]);
      out.emplace_back(std::move(clause));
    }
  }
  prefix.push_back(lits.back());
  out.emplace_back(std::move(prefix));
  return out;
}

}  // namespace

ChainFormula build_chain(std::uint64_t k, int m, std::vector<Var> vars) {
  if (m < 1 || m > kMaxChainWidth)
    throw InvalidArgument("chain width m must be in 1.." + std::to_string(kMaxChainWidth));
  if (k == 0 || k >= (std::uint64_t{1} << m))
    throw InvalidArgument("chain count k=" + std::to_string(k) + " out of range for m=" +
                          std::to_string(m));
  if (k % 2 == 0) throw InvalidArgument("chain count k must be odd, got " + std::to_string(k));
  if (vars.size() != static_cast<std::size_t>(m))
    throw InvalidArgument("chain needs exactly m variables");
  auto sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("chain variables must be distinct");
  if (sorted.front() < 1) throw InvalidArgument("chain variable must be >= 1");

  ChainFormula c;
  c.k_ = k;
  c.vars_ = std::move(vars);
  // c_1 is the most significant of the m bits.
  for (int j = 0; j + 1 < m; ++j) {
    bool bit = (k >> (m - 1 - j)) & 1u;
    c.connectors_.push_back(bit ? Connector::Or : Connector::And);
  }
  return c;
}

bool ChainFormula::evaluate(const Assignment& sigma) const {
  // Right fold from a_m.
  bool acc = sigma.value(vars_.back());
  for (int j = m() - 2; j >= 0; --j) {
    bool a = sigma.value(vars_[static_cast<std::size_t>(j)]);
    acc = connectors_[static_cast<std::size_t>(j)] == Connector::Or ? (a || acc) : (a && acc);
  }
  return acc;
}

std::vector<Clause> chain_to_cnf(const ChainFormula& c) {
  std::vector<Literal> lits;
  for (Var v : c.vars()) lits.emplace_back(v, true);
  return prefix_scan_cnf(lits, c.connectors());
}

std::vector<Clause> negated_chain_to_cnf(const ChainFormula& c) {
  std::vector<Literal> lits;
  for (Var v : c.vars()) lits.emplace_back(v, false);
  std::vector<Connector> dual;
  for (auto con : c.connectors()) dual.push_back(con == Connector::Or ? Connector::And : Connector::Or);
  return prefix_scan_cnf(lits, dual);
}

std::uint64_t count_chain_models(const ChainFormula& c) {
  if (c.m() > 20) throw InvalidArgument("count_chain_models supports m <= 20");
  auto dom = make_var_set(c.vars());
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << c.m();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<bool> vals(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) vals[i] = (bits >> i) & 1u;
    count += c.evaluate(Assignment{dom, std::move(vals)});
  }
  return count;
}

}  // namespace samplecheck
