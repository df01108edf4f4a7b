#pragma once

#include <cstdint>
#include <vector>

#include "samplecheck/formula.hpp"
#include "samplecheck/weights.hpp"

namespace samplecheck {

/// The weight k / 2^m with k odd and k < 2^m.
struct DyadicWeight {
  std::uint64_t k = 1;
  int m = 1;

  double value() const noexcept { return static_cast<double>(k) / static_cast<double>(std::uint64_t{1} << m); }
  friend bool operator==(const DyadicWeight&, const DyadicWeight&) = default;
};

/// Nearest odd-numerator dyadic to `w` with m ≤ m_max; ties go to the smaller
/// m, then the smaller k.
DyadicWeight approximate_dyadic(double w, int m_max);

struct TransformOptions {
  int m_max = 12;
  /// Upper bound on Σ m_i.
  std::uint64_t max_fresh_vars = 1u << 20;
};

struct DyadicChoice {
  Var var = 1;
  double weight = 0.5;
  DyadicWeight dyadic;
  std::vector<Var> chain_vars;
  double error = 0.0;
};

struct TransformResult {
  CnfFormula formula;
  std::vector<DyadicChoice> choices;
  /// max |w - k/2^m| over the sampling set.
  double max_error = 0.0;
};

/// φ ∧ ⋀_{x ∈ S} (x ↔ ψ_{k_x, m_x}(fresh)), so a uniform sampler over the result,
/// projected to S, realizes the literal-weighted distribution with the dyadic
/// weights. x → ψ is (¬x ∨ C) per clause of ψ; ψ → x is (x ∨ D) per clause of
/// the negated chain.
TransformResult weighted_to_uniform(const CnfFormula& phi, const WeightMap& w,
                                    const TransformOptions& opts = {});

}  // namespace samplecheck
