// samplecheck: test constrained samplers against a literal-weighted target.
//
// Exit codes: 0 success / ACCEPT, 1 REJECT, 2 usage, input or protocol error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "samplecheck/report.hpp"
#include "samplecheck/samplecheck.hpp"

namespace sc = samplecheck;

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

struct ParamOpts {
  double epsilon = 0.1;
  double eta = 1.6;
  double delta = 0.2;
  int m = 12;
  std::uint64_t seed = 0;

  sc::TestParams params() const {
    sc::TestParams p{epsilon, eta, delta, m, seed};
    p.validate();
    return p;
  }
};

void add_param_flags(CLI::App* cmd, ParamOpts& o) {
  cmd->add_option("--epsilon", o.epsilon, "tolerance (0 < epsilon < 1/3)")->capture_default_str();
  cmd->add_option("--eta", o.eta, "intolerance (6*epsilon < eta <= 2)")->capture_default_str();
  cmd->add_option("--delta", o.delta, "confidence (0 < delta < 1)")->capture_default_str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sc::Error("cannot write " + path);
  out << text;
}

sc::WeightMap load_weights(const std::string& path) {
  return path.empty() ? sc::WeightMap::uniform() : sc::read_weights_file(path);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw sc::InvalidArgument("bad integer '" + tok + "'");
    if (v != 0) out.push_back(v);
  }
  return out;
}

void warn_lint(const sc::CnfFormula& f) {
  for (const auto& w : sc::lint(f)) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical tester for weighted constrained samplers"};
  app.require_subcommand(1);

  // test
  ParamOpts test_p;
  std::string test_input, test_weights, test_sampler = "builtin:ideal", test_output;
  double test_timeout = 600.0;
  auto* test = app.add_subcommand("test", "run the (epsilon, eta, delta) tester on a sampler");
  test->add_option("--input", test_input, "CNF in DIMACS")->required();
  test->add_option("--weights", test_weights, "weight file (default: all 0.5)");
  test->add_option("--sampler", test_sampler, "builtin:ideal|builtin:uniform|builtin:pointmass or a command")
      ->capture_default_str();
  add_param_flags(test, test_p);
  test->add_option("--m", test_p.m, "kernel chain width")->capture_default_str();
  test->add_option("--seed", test_p.seed, "run seed")->capture_default_str();
  test->add_option("--timeout", test_timeout, "seconds per external sampler call")->capture_default_str();
  test->add_option("--output", test_output, "witness path on REJECT (default <input>.witness.cnf)");

  // maxsamples
  ParamOpts ms_p;
  std::string ms_input, ms_weights;
  double ms_tilt = 0.0;
  std::uint64_t ms_trials = 0;
  auto* maxsamples = app.add_subcommand("maxsamples", "worst-case sample budget");
  maxsamples->add_option("--input", ms_input, "CNF to take the tilt from");
  maxsamples->add_option("--weights", ms_weights, "weight file");
  maxsamples->add_option("--tilt", ms_tilt, "explicit tilt (overrides --input)");
  maxsamples->add_option("--trials", ms_trials, "override the trial count t");
  add_param_flags(maxsamples, ms_p);

  // chain
  std::uint64_t chain_k = 1;
  int chain_m = 1;
  std::string chain_output;
  auto* chain = app.add_subcommand("chain", "emit the chain formula with k models on m variables");
  chain->add_option("--k", chain_k, "model count (odd)")->required();
  chain->add_option("--m", chain_m, "width")->required();
  chain->add_option("--output", chain_output, "output path (default stdout)");

  // kernel
  std::string kern_input, kern_s1, kern_s2, kern_output;
  int kern_m = 12;
  std::uint64_t kern_seed = 0;
  auto* kernel = app.add_subcommand("kernel", "build the pair-conditioning formula");
  kernel->add_option("--input", kern_input, "CNF in DIMACS")->required();
  kernel->add_option("--sigma1", kern_s1, "signed literals over the sampling set")->required();
  kernel->add_option("--sigma2", kern_s2, "signed literals over the sampling set")->required();
  kernel->add_option("--m", kern_m, "chain width")->capture_default_str();
  kernel->add_option("--seed", kern_seed, "seed for the literal choice")->required();
  kernel->add_option("--output", kern_output, "output path (default stdout)");

  // transform
  std::string tr_input, tr_weights, tr_output, tr_report;
  int tr_mmax = 12;
  auto* transform = app.add_subcommand("transform", "rewrite a weighted instance for a uniform sampler");
  transform->add_option("--input", tr_input, "CNF in DIMACS")->required();
  transform->add_option("--weights", tr_weights, "weight file")->required();
  transform->add_option("--mmax", tr_mmax, "largest chain width per variable")->capture_default_str();
  transform->add_option("--output", tr_output, "output path (default stdout)");
  transform->add_option("--report", tr_report, "sidecar JSON (default <output>.report.json)");

  // enumerate
  std::string en_input, en_over;
  std::size_t en_limit = 1u << 20;
  auto* enumerate = app.add_subcommand("enumerate", "list projected models");
  enumerate->add_option("--input", en_input, "CNF in DIMACS")->required();
  enumerate->add_option("--over", en_over, "projection variables (default: sampling set)");
  enumerate->add_option("--limit", en_limit, "abort beyond this many models")->capture_default_str();

  // baseline
  ParamOpts bl_p;
  double bl_count = 0.0;
  std::string bl_input;
  auto* baseline = app.add_subcommand("baseline", "sample count of the generic identity tester");
  baseline->add_option("--count", bl_count, "model count #phi");
  baseline->add_option("--input", bl_input, "CNF to count (projected on its sampling set)");
  add_param_flags(baseline, bl_p);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*test) {
      const auto p = test_p.params();
      const auto f = sc::read_dimacs_file(test_input);
      warn_lint(f);
      const auto w = load_weights(test_weights);
      if (!(test_timeout > 0.0)) throw sc::InvalidArgument("timeout must be positive");
      auto sampler = sc::make_sampler(
          test_sampler, std::chrono::milliseconds(static_cast<long long>(test_timeout * 1000.0)));
      sc::IdealSampler ideal;
      const auto verdict = sc::barbarik2(*sampler, ideal, p, f, w);
      auto j = sc::verdict_to_json(verdict, p);
      if (verdict.witness) {
        const std::string path = test_output.empty() ? test_input + ".witness.cnf" : test_output;
        sc::write_dimacs_file(path, verdict.witness->phi_hat);
        j["witness_path"] = path;
      }
      std::cout << j.dump(2) << '\n';
      return verdict.outcome == sc::Outcome::Accept ? kExitAccept : kExitReject;
    }

    if (*maxsamples) {
      const auto p = ms_p.params();
      double tilt = ms_tilt;
      std::string source = "explicit";
      if (!(tilt > 0.0)) {
        if (ms_input.empty()) throw sc::InvalidArgument("maxsamples needs --tilt or --input");
        const auto f = sc::read_dimacs_file(ms_input);
        const auto w = load_weights(ms_weights);
        if (sc::is_enumerable(f, f.sampling_set)) {
          tilt = sc::tilt_exact(f, w);
          source = "exact";
        } else {
          tilt = sc::tilt_upper_bound(f.sampling_set, w);
          source = "upper_bound";
        }
      }
      const std::uint64_t t = ms_trials > 0 ? ms_trials : sc::compute_trials(p);
      const auto b = sc::compute_bounds(p, t, tilt);
      nlohmann::json j{{"tilt", tilt},
                       {"tilt_source", source},
                       {"trials", t},
                       {"N_at_tilt", b.N},
                       {"draw_budget", sc::draw_budget(tilt, p, t)},
                       {"max_samples", sc::max_samples(tilt, p, t)}};
      std::cout << j.dump(2) << '\n';
      return kExitAccept;
    }

    if (*chain) {
      const auto c = sc::build_chain(chain_k, chain_m, sc::var_range(1, chain_m));
      emit(sc::emit_dimacs(sc::CnfFormula::with_all_sampled(chain_m, sc::chain_to_cnf(c))),
           chain_output);
      return kExitAccept;
    }

    if (*kernel) {
      const auto f = sc::read_dimacs_file(kern_input);
      const auto s1 = sc::Assignment::from_dimacs(parse_int_list(kern_s1));
      const auto s2 = sc::Assignment::from_dimacs(parse_int_list(kern_s2));
      if (s1.domain() != f.sampling_set)
        throw sc::InvalidArgument("--sigma1 must assign exactly the sampling set");
      if (s2.domain() != f.sampling_set)
        throw sc::InvalidArgument("--sigma2 must assign exactly the sampling set");
      sc::Rng rng(kern_seed);
      const auto out = sc::barbarik2_kernel(f, s1, s2, rng, sc::KernelConfig::with_width(kern_m));
      emit(sc::emit_dimacs(out.phi_hat), kern_output);
      return kExitAccept;
    }

    if (*transform) {
      const auto f = sc::read_dimacs_file(tr_input);
      const auto w = sc::read_weights_file(tr_weights);
      const auto r = sc::weighted_to_uniform(f, w, sc::TransformOptions{tr_mmax});
      emit(sc::emit_dimacs(r.formula), tr_output);
      std::string report = tr_report;
      if (report.empty() && !tr_output.empty() && tr_output != "-")
        report = tr_output + ".report.json";
      const auto j = sc::transform_report_to_json(r);
      if (report.empty())
        std::cerr << "max dyadic approximation error: " << r.max_error << '\n';
      else
        emit(j.dump(2) + "\n", report);
      return kExitAccept;
    }

    if (*enumerate) {
      const auto f = sc::read_dimacs_file(en_input);
      std::vector<sc::Var> over = f.sampling_set;
      if (!en_over.empty()) {
        over.clear();
        for (int v : parse_int_list(en_over)) over.push_back(std::abs(v));
      }
      sc::EnumerationOptions opts;
      opts.limit = en_limit;
      for (const auto& m : sc::enumerate_models(f, over, opts)) std::cout << m.to_string() << '\n';
      return kExitAccept;
    }

    if (*baseline) {
      const auto p = bl_p.params();
      double count = bl_count;
      if (!(count >= 1.0)) {
        if (bl_input.empty()) throw sc::InvalidArgument("baseline needs --count or --input");
        const auto f = sc::read_dimacs_file(bl_input);
        count = static_cast<double>(sc::enumerate_models(f, f.sampling_set).size());
      }
      nlohmann::json j{{"model_count", count}, {"baseline_samples", sc::baseline_samples(count, p)}};
      std::cout << j.dump(2) << '\n';
      return kExitAccept;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
