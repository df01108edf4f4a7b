#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// enumeration sweep; oracles go through evaluate() on every total assignment.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "samplecheck/formula.hpp"
#include "samplecheck/rng.hpp"

namespace samplecheck::testing {

inline Assignment from_bits(const std::vector<Var>& dom, std::uint64_t bits) {
  // Most significant bit is the first domain variable.
  std::vector<bool> vals(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) vals[i] = (bits >> (dom.size() - 1 - i)) & 1u;
  return Assignment{dom, vals};
}

inline Assignment assign(std::initializer_list<int> signed_lits) {
  std::vector<int> v(signed_lits);
  return Assignment::from_dimacs(v);
}

/// Projected model set by sweeping all 2^|Supp ∪ over| assignments.
inline std::set<Assignment> brute_models(const CnfFormula& f, const std::vector<Var>& over) {
  auto sup = f.support();
  std::vector<Var> dom;
  std::set_union(sup.begin(), sup.end(), over.begin(), over.end(), std::back_inserter(dom));
  std::set<Assignment> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dom.size()); ++bits) {
    auto a = from_bits(dom, bits);
    if (evaluate(f, a)) out.insert(project(a, over));
  }
  return out;
}

inline std::uint64_t brute_count(const CnfFormula& f) {
  auto dom = f.support();
  std::uint64_t n = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dom.size()); ++bits)
    n += evaluate(f, from_bits(dom, bits));
  return n;
}

inline CnfFormula random_formula(Rng& rng, int num_vars, int num_clauses, int max_width) {
  CnfFormula f;
  f.num_vars = num_vars;
  for (int c = 0; c < num_clauses; ++c) {
    int width = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_width)));
    std::vector<Literal> lits;
    for (int i = 0; i < width; ++i)
      lits.emplace_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars))),
                        rng.below(2) == 1);
    f.clauses.emplace_back(std::move(lits));
  }
  f.sampling_set = var_range(1, num_vars);
  return f;
}

inline std::vector<Var> random_subset(Rng& rng, int num_vars, bool nonempty = true) {
  std::vector<Var> s;
  for (Var v = 1; v <= num_vars; ++v)
    if (rng.below(2)) s.push_back(v);
  if (s.empty() && nonempty) s.push_back(1 + static_cast<int>(rng.below(num_vars)));
  return s;
}

}  // namespace samplecheck::testing
