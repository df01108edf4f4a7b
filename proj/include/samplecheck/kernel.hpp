#pragma once

#include <cstdint>
#include <vector>

#include "samplecheck/chain.hpp"
#include "samplecheck/formula.hpp"
#include "samplecheck/rng.hpp"

namespace samplecheck {

/// Gadget width and model count of the kernel's chain formula.
struct KernelConfig {
  int m = 12;
  std::uint64_t k = (std::uint64_t{1} << 12) - 1;

  static KernelConfig with_width(int m) {
    return KernelConfig{m, (std::uint64_t{1} << m) - 1};
  }
};

struct KernelOutput {
  CnfFormula phi_hat;
  Literal chosen_literal;
  std::vector<Var> fresh_vars;
  std::uint64_t k = 0;
  int m = 0;
};

/// Clauses over the shared domain S of σ1 and σ2 whose conjunction with φ has
/// exactly {σ1, σ2} as projected models: unit clauses on agreeing variables,
/// and on the disagreement set D (smallest member d*) the equivalences
/// l1(d*) ↔ l1(d) for every other d ∈ D, where l1 is the σ1 literal.
///
/// Membership of σ1, σ2 in R_{φ↓S} is verified when φ is within the
/// enumeration cap.
std::vector<Clause> encode_pair(const CnfFormula& phi, const Assignment& sigma1,
                                const Assignment& sigma2);

/// Builds φ̂ = φ ∧ pair(σ1, σ2) ∧ (¬l → ψ_{k,m}(V)) ∧ (l → ψ_{k,m}(V)) with l
/// drawn uniformly from the disagreeing literals of σ1 and σ2 and V fresh.
/// φ̂ keeps the sampling set of σ1's domain.
KernelOutput barbarik2_kernel(const CnfFormula& phi, const Assignment& sigma1,
                              const Assignment& sigma2, Rng& rng,
                              const KernelConfig& cfg = {});

}  // namespace samplecheck
