#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "samplecheck/formula.hpp"

namespace samplecheck {

enum class Connector { Or, And };

/// The chain formula a_1 C_1 (a_2 C_2 (... (a_{m-1} C_{m-1} a_m))) whose
/// connectors spell the m-bit binary representation of k (most significant
/// bit first, OR for 1). It has exactly k models over its m variables.
class ChainFormula {
 public:
  std::uint64_t k() const noexcept { return k_; }
  int m() const noexcept { return static_cast<int>(vars_.size()); }
  const std::vector<Var>& vars() const noexcept { return vars_; }
  const std::vector<Connector>& connectors() const noexcept { return connectors_; }

  /// Truth value under an assignment covering vars().
  bool evaluate(const Assignment& sigma) const;

 private:
  friend ChainFormula build_chain(std::uint64_t, int, std::vector<Var>);
  std::uint64_t k_ = 1;
  std::vector<Var> vars_;
  std::vector<Connector> connectors_;
};

inline constexpr int kMaxChainWidth = 62;

/// Requires k odd, 0 < k < 2^m, m distinct variables.
ChainFormula build_chain(std::uint64_t k, int m, std::vector<Var> vars);

/// At most m clauses, equivalent to the chain.
std::vector<Clause> chain_to_cnf(const ChainFormula& c);

/// CNF of the negated chain: literals flipped and connectors swapped, which is
/// again chain shaped (2^m - k models).
std::vector<Clause> negated_chain_to_cnf(const ChainFormula& c);

/// Brute-force model count over the chain's variables; m ≤ 20.
std::uint64_t count_chain_models(const ChainFormula& c);

}  // namespace samplecheck
