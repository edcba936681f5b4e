#pragma once

// Core value types shared by the optimizers, the problem definitions and the
// experiment harness.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sjaya {

/// Invalid bounds, population size or other run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller passed arguments that violate an operation's contract
/// (wrong dimension, out-of-box design, unknown identifier).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The objective returned NaN or an infinity; the run is aborted.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Box constraints. lower[i] < upper[i] for every dimension, dimension >= 1.
class Bounds {
 public:
  Bounds(std::vector<double> lower, std::vector<double> upper);

  static Bounds uniform(std::size_t dimension, double lower, double upper);

  std::size_t dimension() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }
  double lower(std::size_t i) const { return lower_[i]; }
  double upper(std::size_t i) const { return upper_[i]; }

  bool contains(std::span<const double> x) const noexcept;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// How a problem decides that a fitness value counts as a success.
struct SuccessTarget {
  enum class Kind {
    WithinDistance,  // |f - value| <= tolerance
    AtMost,          // f <= value
  };

  Kind kind = Kind::WithinDistance;
  double value = 0.0;
  double tolerance = 0.0;

  static SuccessTarget within(double value, double tolerance) {
    return {Kind::WithinDistance, value, tolerance};
  }
  static SuccessTarget at_most(double value) { return {Kind::AtMost, value, 0.0}; }

  bool met(double fitness) const noexcept;
};

using Objective = std::function<double(std::span<const double>)>;

/// A bounded minimization problem.
struct Problem {
  std::string id;
  Bounds bounds;
  Objective objective;
  std::optional<double> known_optimum;
  SuccessTarget target;

  std::size_t dimension() const noexcept { return bounds.dimension(); }
};

struct Individual {
  std::vector<double> x;
  double fitness = 0.0;
};

/// Members plus the indices of the current best and worst member.
struct Population {
  std::vector<Individual> members;
  std::size_t best_index = 0;
  std::size_t worst_index = 0;

  std::size_t size() const noexcept { return members.size(); }
  const Individual& best() const { return members[best_index]; }
  const Individual& worst() const { return members[worst_index]; }
};

/// Lowest index attaining the minimum fitness.
std::size_t scan_best(std::span<const Individual> members);
/// Lowest index attaining the maximum fitness.
std::size_t scan_worst(std::span<const Individual> members);

/// The two per-dimension random coefficient vectors used to build candidates.
/// Every entry lies in (0, 1].
struct RVector {
  std::vector<double> r1;
  std::vector<double> r2;
  std::uint64_t generation = 0;
};

enum class Variant { Jaya, SJaya };

/// Whether the r coefficients are drawn once per generation and shared by all
/// members, or drawn afresh for each member.
enum class RSchedule { PerGeneration, PerIndividual };

struct OptimizerConfig {
  std::size_t pop_size = 20;
  std::size_t generations = 100;
  std::uint64_t seed = 0;
  Variant variant = Variant::SJaya;
  RSchedule r_schedule = RSchedule::PerGeneration;

  void validate() const;
};

struct TracePoint {
  std::uint64_t evals = 0;
  double best_fitness = 0.0;
};

/// Log of one run: every improvement of the best-so-far fitness, keyed by the
/// evaluation count at which it happened, plus the final best member.
struct RunTrace {
  std::vector<TracePoint> improvements;
  Individual best;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  Variant variant = Variant::SJaya;

  double best_fitness() const { return best.fitness; }
};

std::string to_string(Variant v);
std::string to_string(RSchedule s);
Variant parse_variant(const std::string& text);
RSchedule parse_r_schedule(const std::string& text);

}  // namespace sjaya
