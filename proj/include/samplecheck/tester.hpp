#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "samplecheck/formula.hpp"
#include "samplecheck/kernel.hpp"
#include "samplecheck/samplers.hpp"
#include "samplecheck/weights.hpp"

namespace samplecheck {

/// Tolerance ε, intolerance η and confidence δ of an (ε, η, δ)-tester.
struct TestParams {
  double epsilon = 0.1;
  double eta = 1.6;
  double delta = 0.2;
  int m_kernel = 12;
  std::uint64_t seed = 0;

  /// Requires 0 < ε < 1/3, 6ε < η ≤ 2, 0 < δ < 1 and 1 ≤ m_kernel ≤ 62.
  void validate() const;
};

/// Per-iteration acceptance window for an assignment pair with weight ratio α.
struct IterationBounds {
  double alpha = 1.0;
  double lo = 0.0;
  double hi = 0.0;
  double L = 0.0;
  double H = 0.0;
  double T = 0.0;
  /// H - L, computed without cancellation.
  double gap = 0.0;
  /// ceil(n · H / (H - L)^2); integral, but may exceed 64 bits at huge α.
  double N = 1.0;
};

/// ceil(ln(1/δ) / ln(10 / (10 - η(η - 6ε)))), at least 1.
std::uint64_t compute_trials(const TestParams& p);

/// n = 8 ln(t/δ); lo = (1+ε)/(1-ε); hi = 1 + (η+6ε)/4;
/// L = α·lo/(1+α·lo); H = α·hi/(1+α·hi); T = (H+L)/2; N = ceil(n·H/(H-L)^2).
IterationBounds compute_bounds(const TestParams& p, std::uint64_t trials, double alpha);

/// Fraction of `batch` whose projection to S equals `target`.
double bias(const Assignment& target, const SampleBatch& batch, std::span<const Var> sampling_set);

/// Worst-case sample count reported for a run: 2·t·N(α = tilt), the bound
/// that dominates the t + t + t·N draws of the pipeline.
double max_samples(double tilt, const TestParams& p);
double max_samples(double tilt, const TestParams& p, std::uint64_t trials);

/// The literal pipeline total 2t + t·N(α = tilt).
double draw_budget(double tilt, const TestParams& p);
double draw_budget(double tilt, const TestParams& p, std::uint64_t trials);

/// #φ^{2/3} · (η - ε)^{-8/3} · ln(#φ / δ), constant factor 1.
double baseline_samples(double model_count, const TestParams& p);

enum class Outcome { Accept, Reject };

enum class RejectReason {
  /// The conditional batch over-represented σ1.
  BiasAboveThreshold,
  /// The sampler under test returned something outside R_{φ↓S}.
  InvalidSample,
};

struct Witness {
  CnfFormula phi_hat;
  Assignment sigma1;
  Assignment sigma2;
  Literal chosen_literal;
  double alpha = 1.0;
  double observed_bias = 0.0;
  double threshold = 0.0;
  std::uint64_t batch_size = 0;
};

struct Verdict {
  Outcome outcome = Outcome::Accept;
  std::optional<RejectReason> reason;
  /// 1-based iteration that decided a REJECT; 0 for the initial batch.
  std::uint64_t iteration = 0;
  std::uint64_t trials = 0;
  std::uint64_t kernel_calls = 0;
  std::uint64_t samples_from_under_test = 0;
  std::uint64_t samples_from_ideal = 0;
  std::optional<Witness> witness;
  /// Diagnostic for an InvalidSample reject.
  std::string diagnostic;
  std::optional<Assignment> invalid_sample;

  std::uint64_t total_samples() const noexcept {
    return samples_from_under_test + samples_from_ideal;
  }
};

/// Sampler seeds and kernel randomness are keyed by derive_seed(p.seed, stream, i)
/// with these streams.
enum class SeedStream : std::uint64_t { UnderTestInitial = 1, IdealInitial = 2, Kernel = 3, Conditional = 4 };

/// The (ε, η, δ)-tester: draws t samples from each sampler on φ, then for every
/// distinct pair (σ1, σ2) builds the kernel formula φ̂ and checks whether the
/// sampler's conditional frequency of σ1 on φ̂ exceeds the midpoint threshold.
/// S is φ.sampling_set. A single run is sequential and deterministic in p.seed.
Verdict barbarik2(Sampler& under_test, Sampler& ideal, const TestParams& p, const CnfFormula& phi,
                  const WeightMap& w);

std::string to_string(Outcome o);
std::string to_string(RejectReason r);

}  // namespace samplecheck
