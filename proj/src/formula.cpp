#include "samplecheck/formula.hpp"

#include <algorithm>
#include <sstream>

#include "samplecheck/error.hpp"

namespace samplecheck {

Literal::Literal(Var v, bool pos) : var(v), positive(pos) {
  if (v < 1) throw InvalidArgument("variable index must be >= 1, got " + std::to_string(v));
}

Literal Literal::from_dimacs(int signed_lit) {
  if (signed_lit == 0) throw InvalidArgument("literal 0 is the clause terminator");
  return Literal{signed_lit > 0 ? signed_lit : -signed_lit, signed_lit > 0};
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  if (lits_.empty()) throw InvalidArgument("empty clause");
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause::Clause(std::initializer_list<int> dimacs_lits)
    : Clause([&] {
        std::vector<Literal> v;
        v.reserve(dimacs_lits.size());
        for (int l : dimacs_lits) v.push_back(Literal::from_dimacs(l));
        return v;
      }()) {}

bool Clause::is_tautology() const noexcept {
  // Sorted by (var, polarity): complementary pairs are adjacent.
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i].var == lits_[i - 1].var) return true;
  return false;
}

Assignment::Assignment(std::vector<Var> domain, std::vector<bool> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (domain_.size() != values_.size())
    throw InvalidArgument("assignment domain and value counts differ");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i] < 1) throw InvalidArgument("assignment variable must be >= 1");
    if (i > 0 && domain_[i] <= domain_[i - 1])
      throw InvalidArgument("assignment domain must be strictly increasing");
  }
}

Assignment Assignment::from_literals(std::span<const Literal> lits) {
  std::vector<Literal> sorted(lits.begin(), lits.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Var> dom;
  std::vector<bool> vals;
  for (const auto& l : sorted) {
    if (!dom.empty() && dom.back() == l.var)
      throw InvalidArgument("variable " + std::to_string(l.var) + " assigned twice");
    dom.push_back(l.var);
    vals.push_back(l.positive);
  }
  return Assignment{std::move(dom), std::move(vals)};
}

Assignment Assignment::from_dimacs(std::span<const int> signed_lits) {
  std::vector<Literal> lits;
  lits.reserve(signed_lits.size());
  for (int l : signed_lits) lits.push_back(Literal::from_dimacs(l));
  return from_literals(lits);
}

std::optional<bool> Assignment::find(Var v) const noexcept {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v) return std::nullopt;
  return values_[static_cast<std::size_t>(it - domain_.begin())];
}

bool Assignment::contains(Var v) const noexcept { return find(v).has_value(); }

bool Assignment::value(Var v) const {
  auto r = find(v);
  if (!r) throw InvalidArgument("variable " + std::to_string(v) + " not in assignment domain");
  return *r;
}

std::vector<Literal> Assignment::literals() const {
  std::vector<Literal> out;
  out.reserve(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i) out.emplace_back(domain_[i], values_[i]);
  return out;
}

std::vector<int> Assignment::to_dimacs() const {
  std::vector<int> out;
  out.reserve(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i)
    out.push_back(values_[i] ? domain_[i] : -domain_[i]);
  return out;
}

std::string Assignment::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int l : to_dimacs()) {
    if (!first) os << ' ';
    os << l;
    first = false;
  }
  return os.str();
}

bool operator<(const Assignment& a, const Assignment& b) {
  if (a.domain_ != b.domain_) return a.domain_ < b.domain_;
  return a.values_ < b.values_;
}

std::size_t AssignmentHash::operator()(const Assignment& a) const noexcept {
  std::size_t h = std::hash<std::vector<bool>>{}(a.values());
  for (Var v : a.domain()) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

CnfFormula CnfFormula::with_all_sampled(int num_vars, std::vector<Clause> clauses) {
  CnfFormula f{num_vars, std::move(clauses), var_range(1, num_vars)};
  f.validate();
  return f;
}

void CnfFormula::validate() const {
  if (num_vars < 0) throw InvalidArgument("negative variable count");
  for (const auto& c : clauses)
    if (c.max_var() > num_vars)
      throw InvalidArgument("literal " + std::to_string(c.max_var()) + " exceeds num_vars=" +
                            std::to_string(num_vars));
  for (std::size_t i = 0; i < sampling_set.size(); ++i) {
    if (sampling_set[i] < 1 || sampling_set[i] > num_vars)
      throw InvalidArgument("sampling-set variable " + std::to_string(sampling_set[i]) +
                            " outside 1.." + std::to_string(num_vars));
    if (i > 0 && sampling_set[i] <= sampling_set[i - 1])
      throw InvalidArgument("sampling set must be strictly increasing");
  }
}

std::vector<Var> CnfFormula::support() const {
  std::vector<Var> vars;
  for (const auto& c : clauses)
    for (const auto& l : c.literals()) vars.push_back(l.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool CnfFormula::samples_all_vars() const noexcept {
  return sampling_set.size() == static_cast<std::size_t>(num_vars);
}

std::vector<Var> CnfFormula::new_vars(int count) {
  if (count < 0) throw InvalidArgument("negative fresh-variable count");
  auto vars = var_range(num_vars + 1, num_vars + count);
  num_vars += count;
  return vars;
}

std::vector<Var> make_var_set(std::vector<Var> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (!vars.empty() && vars.front() < 1) throw InvalidArgument("variable index must be >= 1");
  return vars;
}

std::vector<Var> var_range(Var first, Var last) {
  std::vector<Var> out;
  for (Var v = first; v <= last; ++v) out.push_back(v);
  return out;
}

std::vector<std::string> lint(const CnfFormula& f) {
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    if (f.clauses[i].is_tautology())
      warnings.push_back("clause " + std::to_string(i + 1) + " is tautological");
  return warnings;
}

bool clause_satisfied(const Clause& c, const Assignment& sigma) {
  for (const auto& l : c.literals())
    if (sigma.value(l.var) == l.positive) return true;
  return false;
}

bool evaluate(const CnfFormula& f, const Assignment& sigma) {
  // Check coverage up front so the error does not depend on clause order.
  for (Var v : f.support())
    if (!sigma.contains(v))
      throw InvalidArgument("assignment does not cover variable " + std::to_string(v));
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return clause_satisfied(c, sigma); });
}

Assignment project(const Assignment& sigma, std::span<const Var> onto) {
  std::vector<Var> dom = make_var_set({onto.begin(), onto.end()});
  std::vector<bool> vals;
  vals.reserve(dom.size());
  for (Var v : dom) {
    auto r = sigma.find(v);
    if (!r)
      throw InvalidArgument("cannot project: variable " + std::to_string(v) +
                            " not in assignment domain");
    vals.push_back(*r);
  }
  return Assignment{std::move(dom), std::move(vals)};
}

std::vector<Literal> diff_literals(const Assignment& a, const Assignment& b) {
  if (a.domain() != b.domain()) throw InvalidArgument("assignments have different domains");
  std::vector<Literal> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.values()[i] != b.values()[i]) out.emplace_back(a.domain()[i], a.values()[i]);
  return out;
}

std::size_t hamming_distance(const Assignment& a, const Assignment& b) {
  if (a.domain() != b.domain()) throw InvalidArgument("assignments have different domains");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.values()[i] != b.values()[i];
  return d;
}

}  // namespace samplecheck
