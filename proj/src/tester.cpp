#include "samplecheck/tester.hpp"

#include <algorithm>
#include <cmath>

#include "samplecheck/error.hpp"
#include "samplecheck/rng.hpp"

namespace samplecheck {

void TestParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0))
    throw InvalidArgument("epsilon must satisfy 0 < epsilon < 1/3");
  if (!(eta > 6.0 * epsilon && eta <= 2.0))
    throw InvalidArgument("eta must satisfy 6*epsilon < eta <= 2");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must satisfy 0 < delta < 1");
  if (m_kernel < 1 || m_kernel > kMaxChainWidth)
    throw InvalidArgument("kernel width m must be in 1.." + std::to_string(kMaxChainWidth));
}

std::uint64_t compute_trials(const TestParams& p) {
  p.validate();
  const double shrink = p.eta * (p.eta - 6.0 * p.epsilon);
  const double t = std::log(1.0 / p.delta) / std::log(10.0 / (10.0 - shrink));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(t)));
}

IterationBounds compute_bounds(const TestParams& p, std::uint64_t trials, double alpha) {
  p.validate();
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be positive");
  if (trials == 0) throw InvalidArgument("trial count must be positive");
  IterationBounds b;
  b.alpha = alpha;
  const double n = 8.0 * std::log(static_cast<double>(trials) / p.delta);
  b.lo = (1.0 + p.epsilon) / (1.0 - p.epsilon);
  b.hi = 1.0 + (p.eta + 6.0 * p.epsilon) / 4.0;
  const double al = alpha * b.lo, ah = alpha * b.hi;
  b.L = al / (1.0 + al);
  b.H = ah / (1.0 + ah);
  b.T = (b.H + b.L) / 2.0;
  // H - L = α(hi - lo) / ((1 + α·lo)(1 + α·hi)); at large α both H and L sit
  // next to 1 and the direct difference loses most of its digits.
  b.gap = alpha * (b.hi - b.lo) / ((1.0 + al) * (1.0 + ah));
  b.N = std::max(1.0, std::ceil(n * b.H / (b.gap * b.gap)));
  return b;
}

double bias(const Assignment& target, const SampleBatch& batch,
            std::span<const Var> sampling_set) {
  if (batch.samples.empty()) throw InvalidArgument("bias of an empty batch");
  std::uint64_t hits = 0;
  for (const auto& s : batch.samples) {
    bool same = std::equal(s.domain().begin(), s.domain().end(), sampling_set.begin(),
                           sampling_set.end())
                    ? s == target
                    : project(s, sampling_set) == target;
    hits += same;
  }
  return static_cast<double>(hits) / static_cast<double>(batch.samples.size());
}

double max_samples(double tilt, const TestParams& p, std::uint64_t trials) {
  if (!(tilt >= 1.0)) throw InvalidArgument("tilt must be at least 1");
  const double t = static_cast<double>(trials);
  return 2.0 * t * compute_bounds(p, trials, tilt).N;
}

double max_samples(double tilt, const TestParams& p) {
  return max_samples(tilt, p, compute_trials(p));
}

double draw_budget(double tilt, const TestParams& p, std::uint64_t trials) {
  if (!(tilt >= 1.0)) throw InvalidArgument("tilt must be at least 1");
  const double t = static_cast<double>(trials);
  return 2.0 * t + t * compute_bounds(p, trials, tilt).N;
}

double draw_budget(double tilt, const TestParams& p) {
  return draw_budget(tilt, p, compute_trials(p));
}

double baseline_samples(double model_count, const TestParams& p) {
  p.validate();
  if (!(model_count >= 1.0)) throw InvalidArgument("model count must be at least 1");
  return std::pow(model_count, 2.0 / 3.0) * std::pow(p.eta - p.epsilon, -8.0 / 3.0) *
         std::log(model_count / p.delta);
}

namespace {

std::uint64_t sub_seed(const TestParams& p, SeedStream s, std::uint64_t i) {
  return derive_seed(p.seed, static_cast<std::uint64_t>(s), i);
}

// Largest conditional batch the tester will request.
constexpr double kMaxBatch = 9007199254740992.0;  // 2^53

}  // namespace

Verdict barbarik2(Sampler& under_test, Sampler& ideal, const TestParams& p, const CnfFormula& phi,
                  const WeightMap& w) {
  p.validate();
  phi.validate();
  const auto& S = phi.sampling_set;
  const std::uint64_t t = compute_trials(p);
  const KernelConfig kcfg = KernelConfig::with_width(p.m_kernel);

  Verdict v;
  v.trials = t;

  auto reject_invalid = [&](std::uint64_t iteration, const Assignment& sample,
                            std::string why) {
    v.outcome = Outcome::Reject;
    v.reason = RejectReason::InvalidSample;
    v.iteration = iteration;
    v.invalid_sample = sample;
    v.diagnostic = std::move(why);
    return v;
  };

  SamplerRequest req{phi, w, S, t, sub_seed(p, SeedStream::UnderTestInitial, 0)};
  const SampleBatch gamma1 = under_test.sample(req);
  v.samples_from_under_test += gamma1.samples.size();
  if (gamma1.samples.size() != t)
    throw ProtocolError("sampler under test returned " + std::to_string(gamma1.samples.size()) +
                        " samples, expected " + std::to_string(t));
  if (auto bad = find_invalid_sample(phi, S, gamma1))
    return reject_invalid(0, gamma1.samples[*bad], "sample is not a projected model of the input");

  req.seed = sub_seed(p, SeedStream::IdealInitial, 0);
  const SampleBatch gamma2 = ideal.sample(req);
  v.samples_from_ideal += gamma2.samples.size();
  if (gamma2.samples.size() != t)
    throw ProtocolError("ideal sampler returned the wrong number of samples");

  for (std::uint64_t i = 0; i < t; ++i) {
    const Assignment& s1 = gamma1.samples[i];
    const Assignment& s2 = gamma2.samples[i];
    if (s1 == s2) continue;

    const double a = std::exp(log_alpha(w, s1, s2));
    const IterationBounds b = compute_bounds(p, t, a);
    if (b.N > kMaxBatch) throw InvalidArgument("conditional batch size exceeds 2^53 samples");
    const auto batch_size = static_cast<std::uint64_t>(b.N);

    Rng krng(sub_seed(p, SeedStream::Kernel, i));
    KernelOutput kernel = barbarik2_kernel(phi, s1, s2, krng, kcfg);
    ++v.kernel_calls;

    SamplerRequest cond{kernel.phi_hat, w, S, batch_size, sub_seed(p, SeedStream::Conditional, i)};
    const SampleBatch gamma3 = under_test.sample(cond);
    v.samples_from_under_test += gamma3.samples.size();
    if (gamma3.samples.size() != batch_size)
      throw ProtocolError("sampler under test returned the wrong number of samples");
    for (const auto& s : gamma3.samples)
      if (!(s == s1 || s == s2))
        return reject_invalid(i + 1, s, "sample on the kernel formula is neither sigma1 nor sigma2");

    const double observed = bias(s1, gamma3, S);
    if (observed > b.T) {
      v.outcome = Outcome::Reject;
      v.reason = RejectReason::BiasAboveThreshold;
      v.iteration = i + 1;
      v.witness = Witness{std::move(kernel.phi_hat), s1, s2, kernel.chosen_literal, a,
                          observed, b.T, batch_size};
      return v;
    }
  }
  v.outcome = Outcome::Accept;
  return v;
}

std::string to_string(Outcome o) { return o == Outcome::Accept ? "ACCEPT" : "REJECT"; }

std::string to_string(RejectReason r) {
  return r == RejectReason::BiasAboveThreshold ? "bias_above_threshold" : "invalid_sample";
}

}  // namespace samplecheck
