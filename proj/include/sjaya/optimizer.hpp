#pragma once

// Jaya and semi-steady-state Jaya (SJaya) for bounded continuous minimization.
//
// Both variants sweep the population in index order, building one candidate
// per member from the member itself, the member at best_index and the member
// at worst_index. They differ in three places:
//
//   * acceptance: SJaya keeps a candidate that is at least as good as the
//     member it replaces, Jaya only a strictly better one;
//   * best index: SJaya moves best_index to j as soon as member j becomes the
//     new strict minimum, Jaya leaves it alone until the sweep ends;
//   * worst index: SJaya rescans the whole population when the member at
//     worst_index was replaced, Jaya rescans once at the end of the sweep.
//
// Rescans read cached fitness values; only candidates are evaluated.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "sjaya/random.hpp"
#include "sjaya/types.hpp"

namespace sjaya {

/// Counts objective evaluations, rejects non-finite values and records every
/// improvement of the best-so-far fitness.
class Evaluator {
 public:
  explicit Evaluator(const Problem& problem);

  /// Evaluates x. Throws EvaluationError on NaN or infinite output.
  double operator()(std::span<const double> x);

  std::uint64_t evaluations() const noexcept { return evaluations_; }
  double best_so_far() const noexcept { return best_so_far_; }
  const std::vector<TracePoint>& improvements() const noexcept { return improvements_; }
  std::vector<TracePoint> take_improvements() { return std::move(improvements_); }

 private:
  const Problem* problem_;
  std::uint64_t evaluations_ = 0;
  double best_so_far_ = std::numeric_limits<double>::infinity();
  std::vector<TracePoint> improvements_;
};

/// Reported after every inner-loop step of a generation.
struct StepEvent {
  std::size_t index = 0;
  double current_fitness = 0.0;
  double candidate_fitness = 0.0;
  bool accepted = false;
  bool worst_rescanned = false;
  const Population* population = nullptr;
};

using StepObserver = std::function<void(const StepEvent&)>;

/// Uniform per-dimension draws inside the bounds, each member evaluated once.
/// best_index / worst_index come from a full scan, lowest index on ties.
Population initialize_population(const Problem& problem, std::size_t pop_size,
                                 RandomSource& rng, Evaluator& evaluator);

/// Draws 2*d coefficients in (0, 1] (all of r1, then all of r2).
RVector draw_r(std::size_t dimension, std::uint64_t generation, RandomSource& rng);

/// Writes the clamped candidate into `out`. |.| applies to the current
/// member's coordinates only. Throws std::logic_error on dimension mismatch.
void make_candidate(std::span<const double> current, std::span<const double> best,
                    std::span<const double> worst, const RVector& r, const Bounds& bounds,
                    std::span<double> out);

std::vector<double> make_candidate(std::span<const double> current,
                                   std::span<const double> best,
                                   std::span<const double> worst, const RVector& r,
                                   const Bounds& bounds);

/// SJaya: candidate <= current. Jaya: candidate < current.
/// Throws EvaluationError when either value is NaN.
bool accept(double candidate_fitness, double current_fitness, Variant variant);

/// One SJaya sweep. `r` holds one RVector shared by every member, or one per
/// member (per-individual schedule).
void sjaya_generation(Population& pop, const Problem& problem, std::span<const RVector> r,
                      Evaluator& evaluator, const StepObserver& observer = {});

/// One Jaya sweep: indices frozen during the sweep, rescanned at its end.
void jaya_generation(Population& pop, const Problem& problem, std::span<const RVector> r,
                     Evaluator& evaluator, const StepObserver& observer = {});

/// Initialization followed by `generations` sweeps of the configured variant.
/// The initial population comes from a random stream that depends on the seed
/// only, so Jaya and SJaya runs with the same seed start identically.
RunTrace run(const Problem& problem, const OptimizerConfig& config,
             const StepObserver& observer = {});

}  // namespace sjaya
