#include <doctest.h>

#include <sys/stat.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "samplecheck/error.hpp"
#include "samplecheck/samplers.hpp"
#include "samplecheck/tester.hpp"
#include "support.hpp"

using namespace samplecheck;
using samplecheck::testing::assign;
using namespace std::chrono_literals;

namespace {

// Writes an executable /bin/sh script. Arguments arrive as
// --input $2 --weights $4 --samples $6 --seed $8.
class FakeSampler {
 public:
  explicit FakeSampler(const std::string& body) {
    char tmpl[] = "/tmp/samplecheck-fake-XXXXXX";
    dir_ = ::mkdtemp(tmpl);
    path_ = dir_ + "/sampler.sh";
    std::ofstream(path_) << "#!/bin/sh\n" << body << "\n";
    ::chmod(path_.c_str(), 0755);
  }
  ~FakeSampler() { std::filesystem::remove_all(dir_); }
  const std::string& path() const { return path_; }
  std::string dir() const { return dir_; }

 private:
  std::string dir_, path_;
};

SamplerRequest request(std::uint64_t count) {
  auto f = CnfFormula::with_all_sampled(2, {Clause{1, 2}});
  return SamplerRequest{f, WeightMap({{1, 0.75}}, 0.5), f.sampling_set, count, 42};
}

const char* kRepeat = R"(i=0; while [ $i -lt "$6" ]; do echo "$LINE"; i=$((i+1)); done)";

std::string repeat(const std::string& line) { return "LINE='" + line + "'\n" + kRepeat; }

}  // namespace

TEST_SUITE("external") {
  TEST_CASE("valid output is parsed line by line") {
    FakeSampler s(repeat("2 -1"));
    auto b = external_sample(s.path(), request(4), 10s);
    REQUIRE(b.samples.size() == 4);
    for (const auto& a : b.samples) CHECK(a == assign({-1, 2}));
  }

  TEST_CASE("the command sees the protocol arguments and files") {
    FakeSampler s(R"(set -e
[ "$1" = --input ] && [ "$3" = --weights ] && [ "$5" = --samples ] && [ "$7" = --seed ]
[ "$8" = 42 ]
grep -q '^p cnf 2 1$' "$2"
grep -q '^1 0.75$' "$4"
grep -q '^2 0.5$' "$4"
i=0; while [ $i -lt "$6" ]; do echo "1 2 0"; i=$((i+1)); done)");
    auto b = external_sample(s.path(), request(3), 10s);
    CHECK(b.samples.size() == 3);
  }

  TEST_CASE("extra words in the sampler spec are passed through") {
    FakeSampler s(R"(shift; i=0; while [ $i -lt "$6" ]; do echo "1 2"; i=$((i+1)); done)");
    auto b = external_sample("/bin/sh " + s.path() + " extra", request(2), 10s);
    CHECK(b.samples.size() == 2);
  }

  TEST_CASE("a literal outside the sampling set is a protocol error") {
    FakeSampler s(repeat("1 2 3"));
    CHECK_THROWS_AS(external_sample(s.path(), request(2), 10s), ProtocolError);
  }

  TEST_CASE("a short batch is a protocol error") {
    FakeSampler s(R"(i=1; while [ $i -lt "$6" ]; do echo "1 2"; i=$((i+1)); done)");
    CHECK_THROWS_AS(external_sample(s.path(), request(5), 10s), ProtocolError);
  }

  TEST_CASE("an incomplete sample is a protocol error") {
    FakeSampler s(repeat("1"));
    CHECK_THROWS_AS(external_sample(s.path(), request(2), 10s), ProtocolError);
  }

  TEST_CASE("a non-zero exit is a process error") {
    FakeSampler s(repeat("1 2") + "\nexit 3");
    CHECK_THROWS_AS(external_sample(s.path(), request(2), 10s), ProcessError);
  }

  TEST_CASE("a hung sampler is killed at the deadline") {
    FakeSampler s("sleep 30");
    auto start = std::chrono::steady_clock::now();
    CHECK_THROWS_AS(external_sample(s.path(), request(1), 300ms), ProcessError);
    CHECK(std::chrono::steady_clock::now() - start < 10s);
  }

  TEST_CASE("a missing command is a process error") {
    CHECK_THROWS_AS(external_sample("/nonexistent/sampler", request(1), 10s), ProcessError);
  }

  TEST_CASE("the tester rejects a sampler that returns a non-model") {
    FakeSampler s(repeat("-1 -2"));
    ExternalSampler under_test(s.path(), 10s);
    IdealSampler ideal;
    auto f = CnfFormula::with_all_sampled(2, {Clause{1, 2}});
    auto v = barbarik2(under_test, ideal, TestParams{}, f, WeightMap::uniform());
    CHECK(v.outcome == Outcome::Reject);
    REQUIRE(v.reason.has_value());
    CHECK(*v.reason == RejectReason::InvalidSample);
    CHECK(v.iteration == 0);
    REQUIRE(v.invalid_sample.has_value());
    CHECK(*v.invalid_sample == assign({-1, -2}));
    CHECK_FALSE(v.witness.has_value());
  }

  TEST_CASE("the tester accepts an external sampler that matches the target") {
    // Only one projected model: any correct sampler always returns it.
    FakeSampler s(repeat("1 -2"));
    ExternalSampler under_test(s.path(), 10s);
    IdealSampler ideal;
    auto f = CnfFormula::with_all_sampled(2, {Clause{1}, Clause{-2}});
    auto v = barbarik2(under_test, ideal, TestParams{}, f, WeightMap::uniform());
    CHECK(v.outcome == Outcome::Accept);
    CHECK(v.kernel_calls == 0);
  }
}
