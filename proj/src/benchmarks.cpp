#include "sjaya/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "sjaya/kernels.hpp"

namespace sjaya::bench {

namespace {

using std::numbers::e;
using std::numbers::pi;

std::array<BenchmarkSpec, kBenchmarkCount> build_specs() {
  const auto zeros = [](std::size_t n) { return std::vector<double>(n, 0.0); };
  return {{
      {BenchmarkId::Ackley, "ackley", "Ackley", 30, -10.0, 10.0, 0.0, zeros(30)},
      {BenchmarkId::Rosenbrock, "rosenbrock", "Rosenb", 30, -10.0, 10.0, 0.0,
       std::vector<double>(30, 1.0)},
      {BenchmarkId::ChungReynolds, "chung-reynolds", "Chu-Rey", 30, -10.0, 10.0, 0.0, zeros(30)},
      {BenchmarkId::Step, "step", "Step", 30, -100.0, 100.0, 0.0, zeros(30)},
      {BenchmarkId::Alpine1, "alpine1", "Alp-1", 30, -10.0, 10.0, 0.0, zeros(30)},
      {BenchmarkId::SumSquares, "sumsquares", "F2-Rao", 30, -10.0, 10.0, 0.0, zeros(30)},
      {BenchmarkId::Sphere, "sphere", "Sphere", 30, -100.0, 100.0, 0.0, zeros(30)},
      {BenchmarkId::Bohachevsky3, "bohachevsky3", "Boha-3", 2, -100.0, 100.0, 0.0, zeros(2)},
      {BenchmarkId::Bohachevsky2, "bohachevsky2", "Boha-2", 2, -100.0, 100.0, 0.0, zeros(2)},
      {BenchmarkId::BartelsConn, "bartels-conn", "Bartel", 2, -500.0, 500.0, 1.0, zeros(2)},
      {BenchmarkId::GoldsteinPrice, "goldstein-price", "Gold-P", 2, -2.0, 2.0, 3.0, {0.0, -1.0}},
      {BenchmarkId::Matyas, "matyas", "Matyas", 2, -10.0, 10.0, 0.0, zeros(2)},
  }};
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  const double sq = kernels::active().sum_squares(x.data(), x.size());
  double cos_sum = 0.0;
  for (double v : x) cos_sum += std::cos(2.0 * pi * v);
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cos_sum / n) + 20.0 + e;
}

double rosenbrock(std::span<const double> x) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    total += 100.0 * a * a + b * b;
  }
  return total;
}

double sphere(std::span<const double> x) {
  return kernels::active().sum_squares(x.data(), x.size());
}

double chung_reynolds(std::span<const double> x) {
  const double s = sphere(x);
  return s * s;
}

double step(std::span<const double> x) {
  double total = 0.0;
  for (double v : x) total += std::floor(std::abs(v));
  return total;
}

double alpine1(std::span<const double> x) {
  double total = 0.0;
  for (double v : x) total += std::abs(v * std::sin(v) + 0.1 * v);
  return total;
}

double sum_squares(std::span<const double> x) {
  return kernels::active().weighted_sum_squares(x.data(), x.size());
}

double bohachevsky3(std::span<const double> x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * pi * x[0] + 4.0 * pi * x[1]) +
         0.3;
}

double bohachevsky2(std::span<const double> x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] -
         0.3 * std::cos(3.0 * pi * x[0]) * std::cos(4.0 * pi * x[1]) + 0.3;
}

double bartels_conn(std::span<const double> x) {
  return std::abs(x[0] * x[0] + x[1] * x[1] + x[0] * x[1]) + std::abs(std::sin(x[0])) +
         std::abs(std::cos(x[1]));
}

double goldstein_price(std::span<const double> x) {
  const double x1 = x[0];
  const double x2 = x[1];
  const double s = x1 + x2 + 1.0;
  const double t = 2.0 * x1 - 3.0 * x2;
  const double a = 1.0 + s * s *
                             (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 +
                              3.0 * x2 * x2);
  const double b = 30.0 + t * t *
                              (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 +
                               27.0 * x2 * x2);
  return a * b;
}

double matyas(std::span<const double> x) {
  return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1];
}

}  // namespace

const std::array<BenchmarkSpec, kBenchmarkCount>& specs() {
  static const auto table = build_specs();
  return table;
}

const BenchmarkSpec& spec(BenchmarkId id) { return specs()[static_cast<std::size_t>(id)]; }

const BenchmarkSpec& find(std::string_view key) {
  std::string k(key);
  std::transform(k.begin(), k.end(), k.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (k == "f2-rao" || k == "f2_rao") return spec(BenchmarkId::SumSquares);
  for (const auto& s : specs())
    if (s.key == k) return s;
  throw UsageError("unknown benchmark '" + std::string(key) + "'");
}

double evaluate(BenchmarkId id, std::span<const double> x) {
  const auto& s = spec(id);
  if (x.size() != s.dimension)
    throw UsageError(std::string(s.key) + " expects dimension " + std::to_string(s.dimension) +
                     ", got " + std::to_string(x.size()));
  switch (id) {
    case BenchmarkId::Ackley: return ackley(x);
    case BenchmarkId::Rosenbrock: return rosenbrock(x);
    case BenchmarkId::ChungReynolds: return chung_reynolds(x);
    case BenchmarkId::Step: return step(x);
    case BenchmarkId::Alpine1: return alpine1(x);
    case BenchmarkId::SumSquares: return sum_squares(x);
    case BenchmarkId::Sphere: return sphere(x);
    case BenchmarkId::Bohachevsky3: return bohachevsky3(x);
    case BenchmarkId::Bohachevsky2: return bohachevsky2(x);
    case BenchmarkId::BartelsConn: return bartels_conn(x);
    case BenchmarkId::GoldsteinPrice: return goldstein_price(x);
    case BenchmarkId::Matyas: return matyas(x);
  }
  throw UsageError("unhandled benchmark id");
}

Problem make_problem(BenchmarkId id) {
  const auto& s = spec(id);
  return Problem{std::string(s.key), s.bounds(),
                 [id](std::span<const double> x) { return evaluate(id, x); },
                 s.global_min_value, SuccessTarget::within(s.global_min_value, kSuccessTolerance)};
}

std::vector<Problem> suite() {
  std::vector<Problem> out;
  out.reserve(kBenchmarkCount);
  for (const auto& s : specs()) out.push_back(make_problem(s.id));
  return out;
}

}  // namespace sjaya::bench
