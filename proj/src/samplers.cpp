#include "samplecheck/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "samplecheck/error.hpp"
#include "samplecheck/rng.hpp"

namespace samplecheck {

void SamplerRequest::validate() const {
  if (count == 0) throw InvalidArgument("sample count must be positive");
  formula.validate();
  for (std::size_t i = 0; i < sampling_set.size(); ++i) {
    if (sampling_set[i] < 1 || sampling_set[i] > formula.num_vars)
      throw InvalidArgument("sampling-set variable outside the formula");
    if (i > 0 && sampling_set[i] <= sampling_set[i - 1])
      throw InvalidArgument("sampling set must be strictly increasing");
  }
}

double ExactDistribution::probability(const Assignment& sigma) const {
  auto it = std::lower_bound(support.begin(), support.end(), sigma);
  if (it == support.end() || !(*it == sigma)) return 0.0;
  return probabilities[static_cast<std::size_t>(it - support.begin())];
}

ExactDistribution exact_distribution(const CnfFormula& f, std::span<const Var> sampling_set,
                                     const WeightMap& w, const EnumerationOptions& opts) {
  ExactDistribution d;
  d.support = enumerate_models(f, sampling_set, opts);
  if (d.support.empty()) throw Unsatisfiable("formula has no projected models");
  std::vector<double> lw;
  lw.reserve(d.support.size());
  for (const auto& s : d.support) lw.push_back(weight_of(w, s).value);
  const double top = *std::max_element(lw.begin(), lw.end());
  double total = 0.0;
  for (double x : lw) total += std::exp(x - top);
  for (double x : lw) d.probabilities.push_back(std::exp(x - top) / total);
  return d;
}

ExactDistribution uniform_distribution(const CnfFormula& f, std::span<const Var> sampling_set,
                                       const EnumerationOptions& opts) {
  ExactDistribution d;
  d.support = enumerate_models(f, sampling_set, opts);
  if (d.support.empty()) throw Unsatisfiable("formula has no projected models");
  d.probabilities.assign(d.support.size(), 1.0 / static_cast<double>(d.support.size()));
  return d;
}

double l1_distance(const ExactDistribution& p, const ExactDistribution& q) {
  std::map<Assignment, double> diff;
  for (std::size_t i = 0; i < p.support.size(); ++i) diff[p.support[i]] += p.probabilities[i];
  for (std::size_t i = 0; i < q.support.size(); ++i) diff[q.support[i]] -= q.probabilities[i];
  double acc = 0.0;
  for (const auto& [_, x] : diff) acc += std::abs(x);
  return acc;
}

SampleBatch sample_from(const ExactDistribution& dist, std::uint64_t count, std::uint64_t seed) {
  std::vector<double> cdf;
  cdf.reserve(dist.probabilities.size());
  double acc = 0.0;
  for (double p : dist.probabilities) cdf.push_back(acc += p);

  Rng rng(seed);
  SampleBatch batch;
  batch.samples.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    double u = rng.uniform01() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;  // u rounded onto the last edge
    batch.samples.push_back(dist.support[static_cast<std::size_t>(it - cdf.begin())]);
  }
  return batch;
}

SampleBatch ideal_sample(const SamplerRequest& req) {
  req.validate();
  return sample_from(exact_distribution(req.formula, req.sampling_set, req.weights), req.count,
                     req.seed);
}

SampleBatch faulty_uniform_sample(const SamplerRequest& req) {
  req.validate();
  return sample_from(uniform_distribution(req.formula, req.sampling_set), req.count, req.seed);
}

SampleBatch point_mass_sample(const SamplerRequest& req) {
  req.validate();
  EnumerationOptions opts;
  auto models = enumerate_models(req.formula, req.sampling_set, opts);
  if (models.empty()) throw Unsatisfiable("formula has no projected models");
  return SampleBatch{std::vector<Assignment>(req.count, models.front())};
}

std::unique_ptr<Sampler> make_sampler(const std::string& spec,
                                      std::chrono::milliseconds timeout) {
  if (spec == "builtin:ideal") return std::make_unique<IdealSampler>();
  if (spec == "builtin:uniform") return std::make_unique<UniformSampler>();
  if (spec == "builtin:pointmass") return std::make_unique<PointMassSampler>();
  if (spec.starts_with("builtin:")) throw InvalidArgument("unknown builtin sampler " + spec);
  if (spec.empty()) throw InvalidArgument("empty sampler command");
  return std::make_unique<ExternalSampler>(spec, timeout);
}

Assignment parse_sample_line(std::string_view line, std::span<const Var> sampling_set) {
  std::istringstream in{std::string(line)};
  std::vector<int> lits;
  std::string tok;
  bool terminated = false;
  while (in >> tok) {
    if (terminated) throw ProtocolError("data after the terminating 0 in sample line");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ProtocolError("non-integer token '" + tok + "' in sample line");
    }
    if (used != tok.size()) throw ProtocolError("non-integer token '" + tok + "' in sample line");
    // A DIMACS-style trailing 0 is tolerated.
    if (v == 0) {
      terminated = true;
      continue;
    }
    lits.push_back(v);
  }
  Assignment a;
  try {
    a = Assignment::from_dimacs(lits);
  } catch (const InvalidArgument& e) {
    throw ProtocolError(std::string("bad sample line: ") + e.what());
  }
  if (!std::equal(a.domain().begin(), a.domain().end(), sampling_set.begin(),
                  sampling_set.end())) {
    for (Var v : a.domain())
      if (!std::binary_search(sampling_set.begin(), sampling_set.end(), v))
        throw ProtocolError("sample assigns variable " + std::to_string(v) +
                            " outside the sampling set");
    throw ProtocolError("sample does not cover the sampling set");
  }
  return a;
}

std::optional<std::size_t> find_invalid_sample(const CnfFormula& f,
                                               std::span<const Var> sampling_set,
                                               const SampleBatch& batch) {
  const auto support = f.support();
  const bool exact = is_enumerable(f, sampling_set) ||
                     std::includes(sampling_set.begin(), sampling_set.end(), support.begin(),
                                   support.end());
  std::vector<const Clause*> inside;
  if (!exact) {
    for (const auto& c : f.clauses)
      if (std::all_of(c.literals().begin(), c.literals().end(), [&](const Literal& l) {
            return std::binary_search(sampling_set.begin(), sampling_set.end(), l.var);
          }))
        inside.push_back(&c);
  }
  // Repeated samples are common; memoize verdicts.
  std::unordered_map<Assignment, bool, AssignmentHash> seen;
  for (std::size_t i = 0; i < batch.samples.size(); ++i) {
    const auto& s = batch.samples[i];
    if (!std::equal(s.domain().begin(), s.domain().end(), sampling_set.begin(),
                    sampling_set.end()))
      return i;
    auto [it, fresh] = seen.try_emplace(s, true);
    if (fresh) {
      if (exact) {
        it->second = has_extension(f, s, EnumerationOptions{support.size(), 1});
      } else {
        it->second = std::all_of(inside.begin(), inside.end(),
                                 [&](const Clause* c) { return clause_satisfied(*c, s); });
      }
    }
    if (!it->second) return i;
  }
  return std::nullopt;
}

}  // namespace samplecheck
