#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "samplecheck/formula.hpp"
#include "samplecheck/weights.hpp"

namespace samplecheck {

struct SamplerRequest {
  CnfFormula formula;
  WeightMap weights;
  std::vector<Var> sampling_set;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument on a zero count or a sampling set outside the
  /// formula's variables.
  void validate() const;
};

struct SampleBatch {
  std::vector<Assignment> samples;
};

/// A constrained sampler: τ independent draws from R_{φ↓S}.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual SampleBatch sample(const SamplerRequest& req) = 0;
  virtual std::string name() const = 0;
};

/// Projected models with their probabilities.
struct ExactDistribution {
  std::vector<Assignment> support;
  std::vector<double> probabilities;

  /// Probability of `sigma`, zero off the support.
  double probability(const Assignment& sigma) const;
};

/// wt(σ)/Σ wt(σ') over R_{φ↓S}, normalized in log space.
ExactDistribution exact_distribution(const CnfFormula& f, std::span<const Var> sampling_set,
                                     const WeightMap& w, const EnumerationOptions& opts = {});
/// Uniform over R_{φ↓S}.
ExactDistribution uniform_distribution(const CnfFormula& f, std::span<const Var> sampling_set,
                                       const EnumerationOptions& opts = {});

/// Σ |p(σ) - q(σ)| over the union of the supports.
double l1_distance(const ExactDistribution& p, const ExactDistribution& q);

/// Draws `count` samples by cumulative inversion of `dist`.
SampleBatch sample_from(const ExactDistribution& dist, std::uint64_t count, std::uint64_t seed);

SampleBatch ideal_sample(const SamplerRequest& req);
/// Uniform over R_{φ↓S}, ignoring the weights.
SampleBatch faulty_uniform_sample(const SamplerRequest& req);
/// Always the smallest projected model, regardless of seed.
SampleBatch point_mass_sample(const SamplerRequest& req);

class IdealSampler final : public Sampler {
 public:
  SampleBatch sample(const SamplerRequest& req) override { return ideal_sample(req); }
  std::string name() const override { return "builtin:ideal"; }
};

class UniformSampler final : public Sampler {
 public:
  SampleBatch sample(const SamplerRequest& req) override { return faulty_uniform_sample(req); }
  std::string name() const override { return "builtin:uniform"; }
};

class PointMassSampler final : public Sampler {
 public:
  SampleBatch sample(const SamplerRequest& req) override { return point_mass_sample(req); }
  std::string name() const override { return "builtin:pointmass"; }
};

inline constexpr std::chrono::seconds kDefaultSamplerTimeout{600};

/// Runs `<command> --input <cnf> --weights <wts> --samples <N> --seed <S>`
/// through /bin/sh and reads exactly N lines of signed literals covering S.
/// Failures to run, time-outs and non-zero exits raise ProcessError; output
/// that breaks the line protocol raises ProtocolError. Samples are not checked
/// against the formula here.
SampleBatch external_sample(const std::string& command, const SamplerRequest& req,
                            std::chrono::milliseconds timeout = kDefaultSamplerTimeout);

class ExternalSampler final : public Sampler {
 public:
  explicit ExternalSampler(std::string command,
                           std::chrono::milliseconds timeout = kDefaultSamplerTimeout)
      : command_(std::move(command)), timeout_(timeout) {}
  SampleBatch sample(const SamplerRequest& req) override {
    return external_sample(command_, req, timeout_);
  }
  std::string name() const override { return command_; }

 private:
  std::string command_;
  std::chrono::milliseconds timeout_;
};

/// `builtin:ideal`, `builtin:uniform`, `builtin:pointmass`, or an external
/// command line.
std::unique_ptr<Sampler> make_sampler(const std::string& spec,
                                      std::chrono::milliseconds timeout = kDefaultSamplerTimeout);

/// Parses one protocol line into an assignment over exactly `sampling_set`.
Assignment parse_sample_line(std::string_view line, std::span<const Var> sampling_set);

/// Index of the first sample that is not over S or not in R_{φ↓S}. Membership
/// is exact when the formula is within the enumeration cap; beyond it only
/// clauses lying entirely inside S are checked.
std::optional<std::size_t> find_invalid_sample(const CnfFormula& f,
                                               std::span<const Var> sampling_set,
                                               const SampleBatch& batch);

}  // namespace samplecheck
