#include <doctest.h>

#include <cmath>

#include "samplecheck/error.hpp"
#include "samplecheck/weights.hpp"
#include "support.hpp"

using namespace samplecheck;
using samplecheck::testing::assign;

namespace {

// Linear-space product, independent of the log-space implementation.
double linear_weight(const WeightMap& w, const Assignment& a) {
  double p = 1.0;
  for (auto l : a.literals()) p *= l.positive ? w.weight(l.var) : 1.0 - w.weight(l.var);
  return p;
}

}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("uniform weights") {
    auto w = WeightMap::uniform();
    CHECK(weight_of(w, assign({1, -2})).value == doctest::Approx(std::log(0.25)));
    CHECK(alpha(w, assign({1, -2}), assign({-1, 2})) == doctest::Approx(1.0));
  }

  TEST_CASE("explicit weights") {
    WeightMap w({{1, 0.75}, {2, 0.25}});
    CHECK(std::exp(weight_of(w, assign({1, -2})).value) == doctest::Approx(0.75 * 0.75));
    CHECK(alpha(w, assign({1}), assign({-1})) == doctest::Approx(3.0));
    CHECK(alpha(w, assign({-1}), assign({1})) == doctest::Approx(1.0 / 3.0));
    CHECK(log_alpha(w, assign({1, 2}), assign({1, -2})) == doctest::Approx(std::log(1.0 / 3.0)));
    CHECK_THROWS_AS(w.weight(3), InvalidArgument);
  }

  TEST_CASE("weight range is open") {
    CHECK_THROWS_AS(WeightMap({{1, 0.0}}), InvalidArgument);
    CHECK_THROWS_AS(WeightMap({{1, 1.0}}), InvalidArgument);
    WeightMap w;
    CHECK_THROWS_AS(w.set(1, 1.5), InvalidArgument);
    CHECK_THROWS_AS(w.set(1, std::nan("")), InvalidArgument);
  }

  TEST_CASE("parse and emit weight files") {
    auto w = parse_weights("c header\n1 0.75\n# note\n\n3 0.1\n");
    CHECK(w.weight(1) == 0.75);
    CHECK(w.weight(3) == 0.1);
    CHECK(w.weight(2) == 0.5);
    CHECK(parse_weights(emit_weights(w)).entries() == w.entries());
    CHECK_THROWS_AS(parse_weights("1 0.5\n1 0.6\n"), ParseError);
    CHECK_THROWS_AS(parse_weights("1\n"), ParseError);
    CHECK_THROWS_AS(parse_weights("0 0.5\n"), ParseError);
    CHECK_THROWS_AS(parse_weights("1 1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_weights("1 0.5 extra\n"), ParseError);
  }

  TEST_CASE("tilt") {
    WeightMap w({{1, 0.75}, {2, 0.9}});
    auto taut = CnfFormula::with_all_sampled(1, {Clause{1, -1}});
    CHECK(tilt_exact(taut, w) == doctest::Approx(3.0));
    std::vector<Var> s12{1, 2};
    CHECK(tilt_upper_bound(s12, w) == doctest::Approx(27.0));

    // x1 ∨ x2: extreme models 11 (0.675) and 10 (0.075), ratio 9.
    auto orf = CnfFormula::with_all_sampled(2, {Clause{1, 2}});
    CHECK(tilt_exact(orf, w) == doctest::Approx(9.0));

    auto single = CnfFormula::with_all_sampled(2, {Clause{1}, Clause{2}});
    CHECK(tilt_exact(single, w) == doctest::Approx(1.0));
    CHECK(tilt_exact(orf, WeightMap::uniform()) == doctest::Approx(1.0));
  }

  TEST_CASE("property: log space agrees with linear space, alpha is antisymmetric") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 1 + static_cast<int>(rng.below(10));
      WeightMap w;
      for (Var v = 1; v <= n; ++v) w.set(v, 0.01 + 0.98 * rng.uniform01());
      auto dom = var_range(1, n);
      auto a = testing::from_bits(dom, rng.below(std::uint64_t{1} << n));
      auto b = testing::from_bits(dom, rng.below(std::uint64_t{1} << n));
      CHECK(std::exp(weight_of(w, a).value) == doctest::Approx(linear_weight(w, a)).epsilon(1e-12));
      CHECK(alpha(w, a, b) * alpha(w, b, a) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(alpha(w, a, b) ==
            doctest::Approx(linear_weight(w, a) / linear_weight(w, b)).epsilon(1e-9));
    }
  }

  TEST_CASE("property: tilt_exact matches brute force and never exceeds the bound") {
    Rng rng(4);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + static_cast<int>(rng.below(9));
      auto f = testing::random_formula(rng, n, static_cast<int>(rng.below(2 * n)), 3);
      f.sampling_set = testing::random_subset(rng, n);
      WeightMap w;
      for (Var v = 1; v <= n; ++v) w.set(v, 0.02 + 0.96 * rng.uniform01());
      auto models = testing::brute_models(f, f.sampling_set);
      if (models.empty()) {
        CHECK_THROWS_AS(tilt_exact(f, w), Unsatisfiable);
        continue;
      }
      double lo = INFINITY, hi = 0;
      for (const auto& m : models) {
        lo = std::min(lo, linear_weight(w, m));
        hi = std::max(hi, linear_weight(w, m));
      }
      double exact = tilt_exact(f, w);
      CHECK(exact == doctest::Approx(hi / lo).epsilon(1e-9));
      CHECK(exact <= tilt_upper_bound(f.sampling_set, w) * (1 + 1e-12));
      CHECK(exact >= 1.0);
    }
  }
}
