#include <doctest.h>

#include "samplecheck/chain.hpp"
#include "samplecheck/error.hpp"
#include "support.hpp"

using namespace samplecheck;

namespace {

// Direct reading of the nested definition on a bit vector: position i (0-based)
// holds a_{i+1}; connector i is bit (m-1-i) of k.
bool chain_oracle(std::uint64_t k, int m, std::uint64_t bits) {
  auto a = [&](int i) { return ((bits >> (m - 1 - i)) & 1u) != 0; };
  bool acc = a(m - 1);
  for (int i = m - 2; i >= 0; --i) {
    bool is_or = ((k >> (m - 1 - i)) & 1u) != 0;
    acc = is_or ? (a(i) || acc) : (a(i) && acc);
  }
  return acc;
}

std::uint64_t cnf_count(const std::vector<Clause>& cnf, const std::vector<Var>& vars) {
  auto f = CnfFormula::with_all_sampled(vars.back(), cnf);
  std::uint64_t n = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits)
    n += evaluate(f, testing::from_bits(vars, bits));
  return n;
}

}  // namespace

TEST_SUITE("chain") {
  TEST_CASE("k = 11, m = 4") {
    auto c = build_chain(11, 4, var_range(1, 4));
    CHECK(c.connectors() ==
          std::vector<Connector>{Connector::Or, Connector::And, Connector::Or});
    auto cnf = chain_to_cnf(c);
    CHECK(cnf == std::vector<Clause>{Clause{1, 2}, Clause{1, 3, 4}});
    CHECK(count_chain_models(c) == 11);
    CHECK(cnf_count(cnf, c.vars()) == 11);
  }

  TEST_CASE("k = 1 is a conjunction") {
    auto c = build_chain(1, 3, var_range(1, 3));
    CHECK(c.connectors() == std::vector<Connector>{Connector::And, Connector::And});
    CHECK(chain_to_cnf(c) == std::vector<Clause>{Clause{1}, Clause{2}, Clause{3}});
    CHECK(count_chain_models(c) == 1);
  }

  TEST_CASE("k = 2^m - 1 is a single disjunction") {
    auto c = build_chain(7, 3, var_range(1, 3));
    CHECK(chain_to_cnf(c) == std::vector<Clause>{Clause{1, 2, 3}});
    CHECK(count_chain_models(c) == 7);

    auto wide = build_chain(4095, 12, var_range(1, 12));
    auto cnf = chain_to_cnf(wide);
    REQUIRE(cnf.size() == 1);
    CHECK(cnf[0].size() == 12);
    CHECK(count_chain_models(wide) == 4095);
    CHECK(cnf_count(cnf, wide.vars()) == 4095);
  }

  TEST_CASE("m = 1") {
    auto c = build_chain(1, 1, {5});
    CHECK(chain_to_cnf(c) == std::vector<Clause>{Clause{5}});
    CHECK(negated_chain_to_cnf(c) == std::vector<Clause>{Clause{-5}});
  }

  TEST_CASE("chains over arbitrary variable names") {
    auto c = build_chain(5, 3, {9, 4, 7});
    CHECK(c.vars() == std::vector<Var>{9, 4, 7});
    // 101: a9 ∨ (a4 ∧ a7)
    CHECK(chain_to_cnf(c) == std::vector<Clause>{Clause{9, 4}, Clause{9, 7}});
    CHECK(count_chain_models(c) == 5);
  }

  TEST_CASE("exhaustive: every odd k for m <= 8 matches the nested definition") {
    for (int m = 1; m <= 8; ++m) {
      auto vars = var_range(1, m);
      for (std::uint64_t k = 1; k < (std::uint64_t{1} << m); k += 2) {
        auto c = build_chain(k, m, vars);
        auto cnf = chain_to_cnf(c);
        auto neg = negated_chain_to_cnf(c);
        auto f = CnfFormula::with_all_sampled(m, cnf);
        auto g = CnfFormula::with_all_sampled(m, neg);
        CHECK(cnf.size() <= static_cast<std::size_t>(m));
        std::uint64_t models = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
          auto a = testing::from_bits(vars, bits);
          bool want = chain_oracle(k, m, bits);
          models += want;
          if (c.evaluate(a) != want || evaluate(f, a) != want || evaluate(g, a) == want)
            FAIL("k=" << k << " m=" << m << " at " << a.to_string());
        }
        CHECK(models == k);
      }
    }
  }

  TEST_CASE("property: random wide chains have k models") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      int m = 9 + static_cast<int>(rng.below(8));
      std::uint64_t k = rng.below(std::uint64_t{1} << (m - 1)) * 2 + 1;
      auto vars = var_range(1, m);
      auto c = build_chain(k, m, vars);
      CHECK(cnf_count(chain_to_cnf(c), vars) == k);
      CHECK(cnf_count(negated_chain_to_cnf(c), vars) == (std::uint64_t{1} << m) - k);
    }
  }

  TEST_CASE("invalid chains") {
    CHECK_THROWS_AS(build_chain(4, 3, var_range(1, 3)), InvalidArgument);
    CHECK_THROWS_AS(build_chain(9, 3, var_range(1, 3)), InvalidArgument);
    CHECK_THROWS_AS(build_chain(0, 3, var_range(1, 3)), InvalidArgument);
    CHECK_THROWS_AS(build_chain(3, 3, {1, 2}), InvalidArgument);
    CHECK_THROWS_AS(build_chain(3, 3, {1, 2, 2}), InvalidArgument);
    CHECK_THROWS_AS(build_chain(1, 0, {}), InvalidArgument);
    CHECK_THROWS_AS(build_chain(1, 63, var_range(1, 63)), InvalidArgument);
  }
}
