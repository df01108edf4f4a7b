#include "samplecheck/report.hpp"

namespace samplecheck {

nlohmann::json verdict_to_json(const Verdict& v, const TestParams& p) {
  nlohmann::json j;
  j["outcome"] = to_string(v.outcome);
  j["reason"] = v.reason ? nlohmann::json(to_string(*v.reason)) : nlohmann::json(nullptr);
  j["trials"] = v.trials;
  j["iteration"] = v.outcome == Outcome::Accept ? v.trials : v.iteration;
  j["kernel_calls"] = v.kernel_calls;
  j["samples_from_under_test"] = v.samples_from_under_test;
  j["samples_from_ideal"] = v.samples_from_ideal;
  j["total_samples"] = v.total_samples();
  j["params"] = {{"epsilon", p.epsilon}, {"eta", p.eta},   {"delta", p.delta},
                 {"m", p.m_kernel},      {"seed", p.seed}};
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"dimacs", emit_dimacs(w.phi_hat)},
                    {"sigma1", w.sigma1.to_dimacs()},
                    {"sigma2", w.sigma2.to_dimacs()},
                    {"chosen_literal", w.chosen_literal.to_dimacs()},
                    {"alpha", w.alpha},
                    {"observed_bias", w.observed_bias},
                    {"threshold", w.threshold},
                    {"batch_size", w.batch_size}};
  } else {
    j["witness"] = nullptr;
  }
  if (v.reason == RejectReason::InvalidSample) {
    j["diagnostic"] = v.diagnostic;
    j["invalid_sample"] = v.invalid_sample ? v.invalid_sample->to_dimacs() : std::vector<int>{};
  }
  return j;
}

nlohmann::json transform_report_to_json(const TransformResult& r) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& c : r.choices) {
    vars.push_back({{"var", c.var},
                    {"weight", c.weight},
                    {"k", c.dyadic.k},
                    {"m", c.dyadic.m},
                    {"dyadic", c.dyadic.value()},
                    {"error", c.error},
                    {"chain_vars", c.chain_vars}});
  }
  return {{"num_vars", r.formula.num_vars},
          {"num_clauses", r.formula.clauses.size()},
          {"max_error", r.max_error},
          {"variables", vars}};
}

}  // namespace samplecheck
