#pragma once

// The twelve benchmark objectives with their dimensions, boxes and known
// global minima.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sjaya/types.hpp"

namespace sjaya::bench {

enum class BenchmarkId {
  Ackley,
  Rosenbrock,
  ChungReynolds,
  Step,
  Alpine1,
  SumSquares,
  Sphere,
  Bohachevsky3,
  Bohachevsky2,
  BartelsConn,
  GoldsteinPrice,
  Matyas,
};

inline constexpr std::size_t kBenchmarkCount = 12;
inline constexpr double kSuccessTolerance = 1.0e-6;

struct BenchmarkSpec {
  BenchmarkId id;
  std::string_view key;      // stable lowercase CLI name
  std::string_view display;  // short table label
  std::size_t dimension;
  double lower;              // same box in every dimension
  double upper;
  double global_min_value;
  std::vector<double> minimizer;  // one point attaining the minimum

  Bounds bounds() const { return Bounds::uniform(dimension, lower, upper); }
};

const std::array<BenchmarkSpec, kBenchmarkCount>& specs();
const BenchmarkSpec& spec(BenchmarkId id);

/// Looks up a benchmark by CLI key; also accepts "f2-rao" for SumSquares.
/// Throws UsageError for unknown names.
const BenchmarkSpec& find(std::string_view key);

/// Exact objective value. Throws UsageError on a dimension mismatch.
double evaluate(BenchmarkId id, std::span<const double> x);

Problem make_problem(BenchmarkId id);

/// All twelve problems, in table order.
std::vector<Problem> suite();

}  // namespace sjaya::bench
