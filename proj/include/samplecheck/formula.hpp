#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace samplecheck {

using Var = int;

struct Literal {
  Var var = 1;
  bool positive = true;

  Literal() = default;
  Literal(Var v, bool pos);

  /// From a signed DIMACS integer; zero is rejected.
  static Literal from_dimacs(int signed_lit);
  int to_dimacs() const noexcept { return positive ? var : -var; }
  Literal operator~() const { return Literal{var, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  /// Orders by variable, negative occurrence first.
  friend auto operator<=>(const Literal& a, const Literal& b) noexcept {
    if (a.var != b.var) return a.var <=> b.var;
    return a.positive <=> b.positive;
  }
};

/// Disjunction of literals. Stored sorted with duplicates merged, so two
/// clauses with the same literal set compare equal.
class Clause {
 public:
  explicit Clause(std::vector<Literal> lits);
  Clause(std::initializer_list<int> dimacs_lits);

  std::span<const Literal> literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  Var max_var() const noexcept { return lits_.back().var; }
  /// Contains a variable in both polarities.
  bool is_tautology() const noexcept;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> lits_;
};

/// Total truth assignment over an ordered set of variables.
class Assignment {
 public:
  Assignment() = default;
  /// `domain` must be strictly increasing; sizes must agree.
  Assignment(std::vector<Var> domain, std::vector<bool> values);
  /// From signed literals in any order; the domain is their variable set.
  static Assignment from_literals(std::span<const Literal> lits);
  static Assignment from_dimacs(std::span<const int> signed_lits);

  const std::vector<Var>& domain() const noexcept { return domain_; }
  const std::vector<bool>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return domain_.size(); }
  bool empty() const noexcept { return domain_.empty(); }

  bool contains(Var v) const noexcept;
  /// Value of `v`; throws InvalidArgument if `v` is not in the domain.
  bool value(Var v) const;
  std::optional<bool> find(Var v) const noexcept;

  /// One literal per domain variable, in domain order.
  std::vector<Literal> literals() const;
  std::vector<int> to_dimacs() const;
  /// Space separated signed literals.
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  /// Domain first, then values lexicographically (false < true).
  friend bool operator<(const Assignment& a, const Assignment& b);

 private:
  std::vector<Var> domain_;
  std::vector<bool> values_;
};

struct AssignmentHash {
  std::size_t operator()(const Assignment& a) const noexcept;
};

/// Conjunction of clauses over variables 1..num_vars, with the sampling set S.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  /// Strictly increasing, subset of 1..num_vars.
  std::vector<Var> sampling_set;

  /// Formula with S = {1..num_vars}.
  static CnfFormula with_all_sampled(int num_vars, std::vector<Clause> clauses);

  /// Throws InvalidArgument when an invariant is broken.
  void validate() const;

  /// Variables occurring in some clause, increasing.
  std::vector<Var> support() const;
  bool samples_all_vars() const noexcept;

  /// Allocates `count` fresh variables num_vars+1.. and bumps num_vars.
  std::vector<Var> new_vars(int count);

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Sorted, deduplicated copy; throws on indices < 1.
std::vector<Var> make_var_set(std::vector<Var> vars);
std::vector<Var> var_range(Var first, Var last);

CnfFormula parse_dimacs(std::string_view text);
CnfFormula read_dimacs_file(const std::string& path);
std::string emit_dimacs(const CnfFormula& f);
void write_dimacs_file(const std::string& path, const CnfFormula& f);

/// One human-readable warning per tautological clause.
std::vector<std::string> lint(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const Assignment& sigma);
bool clause_satisfied(const Clause& c, const Assignment& sigma);

Assignment project(const Assignment& sigma, std::span<const Var> onto);

/// Literals of `a` on the variables where `a` and `b` disagree.
std::vector<Literal> diff_literals(const Assignment& a, const Assignment& b);
std::size_t hamming_distance(const Assignment& a, const Assignment& b);

// Enumeration oracle ----------------------------------------------------------

inline constexpr std::size_t kDefaultEnumerationCap = 26;

struct EnumerationOptions {
  /// Maximum number of variables the sweep may branch on.
  std::size_t support_cap = kDefaultEnumerationCap;
  /// Maximum number of results before EnumerationLimit is thrown.
  std::size_t limit = std::size_t{1} << 26;
};

/// The projected model set {σ↓over : σ over Supp(f) ∪ over, f(σ) = 1},
/// deduplicated and in increasing order.
std::vector<Assignment> enumerate_models(const CnfFormula& f,
                                         std::span<const Var> over,
                                         const EnumerationOptions& opts = {});

/// Number of total models over Supp(f).
std::uint64_t count_models(const CnfFormula& f,
                           const EnumerationOptions& opts = {});

/// Whether `partial` extends to a model of f. Variables of f outside the
/// domain of `partial` are searched; the cap applies to those only.
bool has_extension(const CnfFormula& f, const Assignment& partial,
                   const EnumerationOptions& opts = {});

/// Whether the enumeration over Supp(f) ∪ extra stays within the cap.
bool is_enumerable(const CnfFormula& f, std::span<const Var> extra = {},
                   std::size_t cap = kDefaultEnumerationCap);

}  // namespace samplecheck

template <>
struct std::hash<samplecheck::Assignment> : samplecheck::AssignmentHash {};
