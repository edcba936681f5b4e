#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "sjaya/benchmarks.hpp"
#include "sjaya/random.hpp"

using namespace sjaya;
using bench::BenchmarkId;

namespace {

std::vector<double> filled(std::size_t n, double v) { return std::vector<double>(n, v); }

std::vector<double> random_point(const bench::BenchmarkSpec& s, RandomSource& rng) {
  std::vector<double> x(s.dimension);
  for (auto& v : x) v = rng.uniform(s.lower, s.upper);
  return x;
}

}  // namespace

TEST_CASE("every benchmark attains its global minimum at the listed point") {
  for (const auto& s : bench::specs()) {
    INFO(s.key);
    CHECK(std::abs(bench::evaluate(s.id, s.minimizer) - s.global_min_value) <= 1e-12);
  }
}

TEST_CASE("no random point beats the global minimum") {
  RandomSource rng(31337);
  for (const auto& s : bench::specs()) {
    INFO(s.key);
    for (int k = 0; k < 1000; ++k)
      REQUIRE(bench::evaluate(s.id, random_point(s, rng)) >= s.global_min_value - 1e-12);
  }
}

TEST_CASE("hand-evaluated points") {
  using std::numbers::pi;
  CHECK(bench::evaluate(BenchmarkId::Matyas, std::vector<double>{1.0, 1.0}) ==
        doctest::Approx(0.04).epsilon(1e-14));
  CHECK(bench::evaluate(BenchmarkId::Step, filled(30, 0.5)) == 0.0);
  CHECK(bench::evaluate(BenchmarkId::Step, filled(30, -1.5)) == 30.0);
  CHECK(bench::evaluate(BenchmarkId::Sphere, filled(30, 1.0)) == 30.0);
  CHECK(bench::evaluate(BenchmarkId::SumSquares, filled(30, 1.0)) == 465.0);
  CHECK(bench::evaluate(BenchmarkId::ChungReynolds, filled(30, 1.0)) == 900.0);
  CHECK(bench::evaluate(BenchmarkId::Rosenbrock, filled(30, 0.0)) == 29.0);
  CHECK(bench::evaluate(BenchmarkId::Ackley, filled(30, 1.0)) ==
        doctest::Approx(20.0 - 20.0 * std::exp(-0.2)).epsilon(1e-13));
  CHECK(bench::evaluate(BenchmarkId::Alpine1, filled(30, pi)) ==
        doctest::Approx(30 * 0.1 * pi).epsilon(1e-12));
  CHECK(bench::evaluate(BenchmarkId::Bohachevsky2, std::vector<double>{1.0, 0.0}) ==
        doctest::Approx(1.6).epsilon(1e-14));
  CHECK(bench::evaluate(BenchmarkId::Bohachevsky3, std::vector<double>{1.0, 0.0}) ==
        doctest::Approx(1.6).epsilon(1e-14));
  CHECK(bench::evaluate(BenchmarkId::GoldsteinPrice, std::vector<double>{0.0, 0.0}) == 600.0);
  CHECK(bench::evaluate(BenchmarkId::BartelsConn, std::vector<double>{0.0, 0.0}) == 1.0);
}

TEST_CASE("symmetries") {
  RandomSource rng(5);
  for (int k = 0; k < 200; ++k) {
    std::vector<double> x = random_point(bench::spec(BenchmarkId::Sphere), rng);
    std::vector<double> neg = x;
    for (auto& v : neg) v = -v;
    CHECK(bench::evaluate(BenchmarkId::Sphere, x) == bench::evaluate(BenchmarkId::Sphere, neg));
    CHECK(bench::evaluate(BenchmarkId::Step, x) == bench::evaluate(BenchmarkId::Step, neg));

    const double a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
    // (0.48 a) b and (0.48 b) a may round differently.
    CHECK(bench::evaluate(BenchmarkId::Matyas, std::vector<double>{a, b}) ==
          doctest::Approx(bench::evaluate(BenchmarkId::Matyas, std::vector<double>{b, a})).epsilon(1e-14));
    CHECK(bench::evaluate(BenchmarkId::Matyas, std::vector<double>{a, b}) ==
          bench::evaluate(BenchmarkId::Matyas, std::vector<double>{-a, -b}));
  }
}

TEST_CASE("Chung-Reynolds is the square of Sphere") {
  RandomSource rng(8);
  for (int k = 0; k < 200; ++k) {
    const auto x = random_point(bench::spec(BenchmarkId::ChungReynolds), rng);
    const double s = bench::evaluate(BenchmarkId::Sphere, x);
    CHECK(bench::evaluate(BenchmarkId::ChungReynolds, x) == doctest::Approx(s * s).epsilon(1e-14));
  }
}

TEST_CASE("SumSquares weights the i-th coordinate by i") {
  std::vector<double> x(30, 0.0);
  for (std::size_t i = 0; i < 30; ++i) {
    x.assign(30, 0.0);
    x[i] = 2.0;
    CHECK(bench::evaluate(BenchmarkId::SumSquares, x) == 4.0 * static_cast<double>(i + 1));
  }
}

TEST_CASE("Ackley stays non-negative and bounded on its box") {
  RandomSource rng(12);
  for (int k = 0; k < 500; ++k) {
    const double f = bench::evaluate(BenchmarkId::Ackley, random_point(bench::spec(BenchmarkId::Ackley), rng));
    CHECK(f >= -1e-12);
    CHECK(f <= 20.0 + std::numbers::e);
  }
}

TEST_CASE("dimension mismatch and lookup") {
  CHECK_THROWS_AS(bench::evaluate(BenchmarkId::Sphere, filled(29, 0.0)), UsageError);
  CHECK_THROWS_AS(bench::evaluate(BenchmarkId::Matyas, filled(3, 0.0)), UsageError);
  CHECK(bench::find("sphere").id == BenchmarkId::Sphere);
  CHECK(bench::find("F2-Rao").id == BenchmarkId::SumSquares);
  CHECK(bench::find("Goldstein-Price").id == BenchmarkId::GoldsteinPrice);
  CHECK_THROWS_AS(bench::find("griewank"), UsageError);
}

TEST_CASE("suite exposes the twelve problems") {
  const auto problems = bench::suite();
  REQUIRE(problems.size() == 12);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto& s = bench::specs()[i];
    CHECK(problems[i].id == std::string(s.key));
    CHECK(problems[i].dimension() == s.dimension);
    REQUIRE(problems[i].known_optimum.has_value());
    CHECK(*problems[i].known_optimum == s.global_min_value);
    CHECK(problems[i].target.met(s.global_min_value));
    CHECK(problems[i].target.met(s.global_min_value + 0.9e-6));
    CHECK_FALSE(problems[i].target.met(s.global_min_value + 2e-6));
    CHECK(problems[i].objective(s.minimizer) == bench::evaluate(s.id, s.minimizer));
  }
}
