#include "sjaya/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sjaya/kernels.hpp"

namespace sjaya {

namespace {

// Init and r-coefficient draws come from separate streams of the same seed.
constexpr std::uint32_t kInitStream = 0;
constexpr std::uint32_t kCoefficientStream = 1;

const RVector& coefficients_for(std::span<const RVector> r, std::size_t j) {
  if (r.empty()) throw std::logic_error("no r coefficients supplied");
  return r.size() == 1 ? r[0] : r[j];
}

void check_r_count(std::span<const RVector> r, std::size_t pop_size) {
  if (r.size() != 1 && r.size() != pop_size)
    throw std::logic_error("expected 1 or " + std::to_string(pop_size) +
                           " coefficient vectors, got " + std::to_string(r.size()));
}

}  // namespace

Evaluator::Evaluator(const Problem& problem) : problem_(&problem) {}

double Evaluator::operator()(std::span<const double> x) {
  ++evaluations_;
  const double f = problem_->objective(x);
  if (!std::isfinite(f))
    throw EvaluationError("objective '" + problem_->id + "' returned a non-finite value at evaluation " +
                          std::to_string(evaluations_));
  if (f < best_so_far_) {
    best_so_far_ = f;
    improvements_.push_back({evaluations_, f});
  }
  return f;
}

Population initialize_population(const Problem& problem, std::size_t pop_size,
                                 RandomSource& rng, Evaluator& evaluator) {
  if (pop_size < 2) throw ConfigError("pop_size must be at least 2");
  const Bounds& bounds = problem.bounds;
  const std::size_t d = bounds.dimension();

  Population pop;
  pop.members.resize(pop_size);
  for (auto& m : pop.members) {
    m.x.resize(d);
    for (std::size_t i = 0; i < d; ++i) m.x[i] = rng.uniform(bounds.lower(i), bounds.upper(i));
    m.fitness = evaluator(m.x);
  }
  pop.best_index = scan_best(pop.members);
  pop.worst_index = scan_worst(pop.members);
  return pop;
}

RVector draw_r(std::size_t dimension, std::uint64_t generation, RandomSource& rng) {
  RVector r;
  r.generation = generation;
  r.r1.resize(dimension);
  r.r2.resize(dimension);
  for (auto& v : r.r1) v = rng.unit_open_closed();
  for (auto& v : r.r2) v = rng.unit_open_closed();
  return r;
}

void make_candidate(std::span<const double> current, std::span<const double> best,
                    std::span<const double> worst, const RVector& r, const Bounds& bounds,
                    std::span<double> out) {
  const std::size_t d = current.size();
  if (best.size() != d || worst.size() != d || r.r1.size() != d || r.r2.size() != d ||
      bounds.dimension() != d || out.size() != d)
    throw std::logic_error("make_candidate: dimension mismatch");
  kernels::active().candidate({current.data(), best.data(), worst.data(), r.r1.data(),
                               r.r2.data(), bounds.lower().data(), bounds.upper().data(),
                               out.data(), d});
}

std::vector<double> make_candidate(std::span<const double> current,
                                   std::span<const double> best,
                                   std::span<const double> worst, const RVector& r,
                                   const Bounds& bounds) {
  std::vector<double> out(current.size());
  make_candidate(current, best, worst, r, bounds, out);
  return out;
}

bool accept(double candidate_fitness, double current_fitness, Variant variant) {
  if (std::isnan(candidate_fitness) || std::isnan(current_fitness))
    throw EvaluationError("NaN fitness in acceptance test");
  return variant == Variant::SJaya ? candidate_fitness <= current_fitness
                                   : candidate_fitness < current_fitness;
}

void sjaya_generation(Population& pop, const Problem& problem, std::span<const RVector> r,
                      Evaluator& evaluator, const StepObserver& observer) {
  check_r_count(r, pop.size());
  std::vector<double> candidate(problem.dimension());

  for (std::size_t j = 0; j < pop.size(); ++j) {
    Individual& current = pop.members[j];
    make_candidate(current.x, pop.members[pop.best_index].x, pop.members[pop.worst_index].x,
                   coefficients_for(r, j), problem.bounds, candidate);
    const double f = evaluator(candidate);

    StepEvent event{j, current.fitness, f, false, false, &pop};
    if (accept(f, current.fitness, Variant::SJaya)) {
      event.accepted = true;
      current.x.swap(candidate);
      current.fitness = f;
      if (current.fitness < pop.members[pop.best_index].fitness) pop.best_index = j;
      if (j == pop.worst_index) {
        pop.worst_index = scan_worst(pop.members);
        event.worst_rescanned = true;
      }
    }
    if (observer) observer(event);
  }
}

void jaya_generation(Population& pop, const Problem& problem, std::span<const RVector> r,
                     Evaluator& evaluator, const StepObserver& observer) {
  check_r_count(r, pop.size());
  std::vector<double> candidate(problem.dimension());
  const std::size_t best = pop.best_index;
  const std::size_t worst = pop.worst_index;

  for (std::size_t j = 0; j < pop.size(); ++j) {
    Individual& current = pop.members[j];
    make_candidate(current.x, pop.members[best].x, pop.members[worst].x, coefficients_for(r, j),
                   problem.bounds, candidate);
    const double f = evaluator(candidate);

    StepEvent event{j, current.fitness, f, false, false, &pop};
    if (accept(f, current.fitness, Variant::Jaya)) {
      event.accepted = true;
      current.x.swap(candidate);
      current.fitness = f;
    }
    if (observer) observer(event);
  }
  pop.best_index = scan_best(pop.members);
  pop.worst_index = scan_worst(pop.members);
}

RunTrace run(const Problem& problem, const OptimizerConfig& config, const StepObserver& observer) {
  config.validate();
  const std::size_t d = problem.dimension();

  RandomSource init_rng(config.seed, kInitStream);
  RandomSource coeff_rng(config.seed, kCoefficientStream);
  Evaluator evaluator(problem);

  Population pop = initialize_population(problem, config.pop_size, init_rng, evaluator);

  std::vector<RVector> r;
  for (std::size_t g = 0; g < config.generations; ++g) {
    r.clear();
    const std::size_t draws =
        config.r_schedule == RSchedule::PerGeneration ? 1 : config.pop_size;
    for (std::size_t k = 0; k < draws; ++k) r.push_back(draw_r(d, g + 1, coeff_rng));

    if (config.variant == Variant::SJaya)
      sjaya_generation(pop, problem, r, evaluator, observer);
    else
      jaya_generation(pop, problem, r, evaluator, observer);
  }

  RunTrace trace;
  trace.best = pop.best();
  trace.evaluations = evaluator.evaluations();
  trace.improvements = evaluator.take_improvements();
  trace.seed = config.seed;
  trace.variant = config.variant;
  return trace;
}

}  // namespace sjaya
