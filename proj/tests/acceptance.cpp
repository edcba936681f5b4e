// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "invariants.hpp"
#include "sjaya/benchmarks.hpp"
#include "sjaya/compare.hpp"
#include "sjaya/fuelcell.hpp"
#include "sjaya/harness.hpp"
#include "sjaya/stats.hpp"

using namespace sjaya;

namespace {

// Criterion 1 tolerances live in fixtures.hpp (shared with the unit tests).
constexpr double kCrit1Seconds = 1.0;

// Criterion 2.
constexpr double kWilcoxonMomentTol = 1e-4;
constexpr double kWilcoxonZTol = 1e-3;
constexpr double kCrit2Seconds = 1.0;

// Criterion 3.
constexpr double kOptimumTol = 1e-12;
constexpr int kRandomPoints = 1000;
constexpr double kCrit3Seconds = 5.0;

// Criteria 4 and 5.
constexpr std::size_t kDeskRuns = 10;
constexpr std::uint64_t kDeskSeed = 1;
constexpr double kSphereFheLow = 120000.0;
constexpr double kSphereFheHigh = 195000.0;
constexpr double kBoha2FheMax = 2500.0;

// Criterion 6.
constexpr std::size_t kFuelRuns = 30;
constexpr double kFuelBestMax = 13.616;
constexpr std::size_t kFuelMinSuccess = 24;
constexpr double kCrit6Seconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

harness::BatchResult batch(const std::string& problem, std::size_t pop, std::size_t gens,
                           std::size_t runs, Variant v) {
  harness::ExperimentRow row;
  row.problem = problem;
  row.pop = pop;
  row.gens = gens;
  row.runs = runs;
  row.variant = v;
  row.base_seed = kDeskSeed;
  return harness::execute_batch(row);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = compare::welch_rows(testing::load_summary("reference_jaya.csv"),
                                        testing::load_summary("reference_sjaya.csv"), 30);
  const auto reference = testing::load_reference_welch("reference_welch.csv");
  if (rows.size() != reference.size()) {
    o.fail("row count mismatch");
    return o;
  }
  std::size_t checked = 0;
  auto check = [&](const std::string& label, const std::optional<stats::WelchReport>& ours,
                   std::optional<double> t, std::optional<double> p) {
    if (ours.has_value() != t.has_value()) {
      o.fail(label + " presence differs");
      return;
    }
    if (!ours) return;
    ++checked;
    if (!testing::t_matches(ours->t, *t) || !testing::p_matches(ours->p, *p))
      o.fail(label + " t=" + fmt("%.4f", ours->t) + " p=" + fmt("%.4g", ours->p) +
             " vs reference t=" + fmt("%.4f", *t) + " p=" + fmt("%.4g", *p));
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& pub = reference[i];
    const std::string label = pub.function + " " + std::to_string(pub.pop) + "/" + std::to_string(pub.gens);
    check(label + " fitness", rows[i].fitness, pub.fit_t, pub.fit_p);
    check(label + " first-hit", rows[i].first_hit, pub.fhe_t, pub.fhe_p);
  }
  const double s = seconds_since(t0);
  if (s >= kCrit1Seconds) o.fail("took " + fmt("%.2f", s) + " s");
  o.note(std::to_string(checked) + " (t, p) pairs compared in " + fmt("%.3f", s) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  struct Case {
    std::size_t n;
    double w, mean, sd, z, p;
  };
  const Case cases[] = {
      {19, 15, 95, 24.8495, -3.2194, 0.0006},
      {19, 10, 95, 24.8495, -3.4206, 0.0003},
      {13, 1, 45.5, 14.3091, -3.1099, 0.0009},
      {12, 7, 39, 12.7475, -2.5103, 0.0060},
  };
  for (const auto& c : cases) {
    const auto a = stats::wilcoxon_normal(c.n, c.w);
    const std::string label = "n=" + std::to_string(c.n) + " W=" + fmt("%g", c.w);
    if (std::abs(a.mean_w - c.mean) > kWilcoxonMomentTol) o.fail(label + " mean_W " + fmt("%.6f", a.mean_w));
    if (std::abs(a.std_w - c.sd) > kWilcoxonMomentTol) o.fail(label + " std_W " + fmt("%.6f", a.std_w));
    if (std::abs(a.z - c.z) > kWilcoxonZTol) o.fail(label + " z " + fmt("%.6f", a.z));
    if (fmt("%.4f", a.p) != fmt("%.4f", c.p)) o.fail(label + " p " + fmt("%.6f", a.p));
  }
  const double s = seconds_since(t0);
  if (s >= kCrit2Seconds) o.fail("took " + fmt("%.2f", s) + " s");
  o.note("4 (n, W) cases in " + fmt("%.4f", s) + " s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  RandomSource rng(20240601);
  for (const auto& spec : bench::specs()) {
    const double at_min = bench::evaluate(spec.id, spec.minimizer);
    if (std::abs(at_min - spec.global_min_value) > kOptimumTol)
      o.fail(std::string(spec.key) + " f(x*)=" + fmt("%.17g", at_min));
    std::vector<double> x(spec.dimension);
    for (int k = 0; k < kRandomPoints; ++k) {
      for (auto& v : x) v = rng.uniform(spec.lower, spec.upper);
      if (bench::evaluate(spec.id, x) < spec.global_min_value - kOptimumTol) {
        o.fail(std::string(spec.key) + " random point below the minimum");
        break;
      }
    }
  }
  const double s = seconds_since(t0);
  if (s >= kCrit3Seconds) o.fail("took " + fmt("%.2f", s) + " s");
  o.note("12 functions, " + std::to_string(kRandomPoints) + " points each, " + fmt("%.2f", s) + " s");
  return o;
}

double mean_first_hit(const harness::BatchResult& r) {
  return r.summary.first_hit ? r.summary.first_hit->mean : INFINITY;
}

struct DeskBatches {
  harness::BatchResult sphere_sjaya, sphere_jaya, sum_sjaya, sum_jaya, boha2_sjaya;
};

Outcome criterion4(const DeskBatches& b) {
  Outcome o;
  const auto& sphere = b.sphere_sjaya.summary;
  if (sphere.success != kDeskRuns) o.fail("sphere success " + std::to_string(sphere.success) + "/10");
  const double sphere_fhe = mean_first_hit(b.sphere_sjaya);
  if (!(sphere_fhe >= kSphereFheLow && sphere_fhe <= kSphereFheHigh))
    o.fail("sphere mean first-hit " + fmt("%.1f", sphere_fhe) + " outside [120000, 195000]");
  const auto& boha = b.boha2_sjaya.summary;
  if (boha.success != kDeskRuns) o.fail("bohachevsky2 success " + std::to_string(boha.success) + "/10");
  const double boha_fhe = mean_first_hit(b.boha2_sjaya);
  if (!(boha_fhe < kBoha2FheMax)) o.fail("bohachevsky2 mean first-hit " + fmt("%.1f", boha_fhe));
  o.note("sphere " + std::to_string(sphere.success) + "/10 mean first-hit " + fmt("%.1f", sphere_fhe) +
         ", bohachevsky2 " + std::to_string(boha.success) + "/10 mean first-hit " + fmt("%.1f", boha_fhe));
  return o;
}

Outcome criterion5(const DeskBatches& b) {
  Outcome o;
  auto compare_one = [&](const char* name, const harness::BatchResult& s, const harness::BatchResult& j) {
    const double fs = mean_first_hit(s), fj = mean_first_hit(j);
    if (!(fs < fj)) o.fail(std::string(name) + " SJaya " + fmt("%.1f", fs) + " not below Jaya " + fmt("%.1f", fj));
    o.note(std::string(name) + " SJaya " + fmt("%.1f", fs) + " vs Jaya " + fmt("%.1f", fj));
  };
  compare_one("sphere", b.sphere_sjaya, b.sphere_jaya);
  compare_one("sumsquares", b.sum_sjaya, b.sum_jaya);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = batch("fuelcell", 30, 100, kFuelRuns, Variant::SJaya);
  const double s = seconds_since(t0);
  const double best = r.summary.fitness.best;
  if (!(best <= kFuelBestMax)) o.fail("minimum cost " + fmt("%.6f", best) + " > 13.616");
  if (r.summary.success < kFuelMinSuccess)
    o.fail("success " + std::to_string(r.summary.success) + "/30 < 24");
  if (s >= kCrit6Seconds) o.fail("took " + fmt("%.1f", s) + " s");
  o.note("minimum cost " + fmt("%.6f", best) + ", success " + std::to_string(r.summary.success) +
         "/30, " + fmt("%.1f", s) + " s");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Problem> problems;
  for (auto id : {bench::BenchmarkId::Matyas, bench::BenchmarkId::BartelsConn,
                  bench::BenchmarkId::GoldsteinPrice, bench::BenchmarkId::Bohachevsky2,
                  bench::BenchmarkId::Bohachevsky3})
    problems.push_back(bench::make_problem(id));
  auto square = [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
  };
  problems.push_back({"square1", Bounds::uniform(1, -5, 5), square, 0.0, SuccessTarget::within(0, 1e-6)});
  problems.push_back({"square3", Bounds({-1, 0, -3}, {2, 4, 3}), square, 0.0, SuccessTarget::within(0, 1e-6)});
  // Plateaus make ties common, which exercises the at-least-as-good rule.
  problems.push_back({"floor2", Bounds::uniform(2, -3, 3),
                      [](std::span<const double> x) { return std::floor(std::abs(x[0])) + std::floor(std::abs(x[1])); },
                      0.0, SuccessTarget::within(0, 1e-6)});
  problems.push_back(fuelcell::make_problem());

  std::size_t configs = 0;
  for (const auto& p : problems) {
    for (std::size_t pop : {2u, 3u, 5u, 10u}) {
      for (std::size_t gens : {0u, 1u, 7u, 50u}) {
        for (Variant v : {Variant::SJaya, Variant::Jaya}) {
          for (RSchedule sched : {RSchedule::PerGeneration, RSchedule::PerIndividual}) {
            OptimizerConfig cfg{pop, gens, 1000 + configs, v, sched};
            ++configs;
            const std::string err = testing::check_run_invariants(p, cfg);
            if (!err.empty())
              o.fail(p.id + " pop " + std::to_string(pop) + " gens " + std::to_string(gens) + " " +
                     to_string(v) + ": " + err);
          }
        }
      }
    }
  }

  const Problem clone_problem{"square3", Bounds::uniform(3, -4, 4), square, 0.0, SuccessTarget::within(0, 1e-6)};
  RandomSource rng(77);
  std::size_t clones = 0;
  for (int k = 0; k < 200; ++k, ++clones) {
    std::vector<double> x(3);
    for (auto& v : x) v = k % 7 == 0 ? 0.0 : rng.uniform(0, 4);
    const std::string err = testing::check_clone_fixed_point(clone_problem, x, 2 + k % 9, static_cast<std::uint64_t>(k));
    if (!err.empty()) o.fail(err);
  }
  o.note(std::to_string(configs) + " run configurations, " + std::to_string(clones) +
         " clone populations, " + fmt("%.1f", seconds_since(t0)) + " s");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<Outcome()> check;
  };

  DeskBatches desk;
  bool desk_ready = false;
  std::string desk_error;
  auto ensure_desk = [&] {
    if (desk_ready || !desk_error.empty()) return;
    try {
      desk.sphere_sjaya = batch("sphere", 100, 3000, kDeskRuns, Variant::SJaya);
      desk.sphere_jaya = batch("sphere", 100, 3000, kDeskRuns, Variant::Jaya);
      desk.sum_sjaya = batch("sumsquares", 100, 3000, kDeskRuns, Variant::SJaya);
      desk.sum_jaya = batch("sumsquares", 100, 3000, kDeskRuns, Variant::Jaya);
      desk.boha2_sjaya = batch("bohachevsky2", 15, 5000, kDeskRuns, Variant::SJaya);
      desk_ready = true;
    } catch (const std::exception& e) {
      desk_error = e.what();
    }
  };
  auto with_desk = [&](Outcome (*fn)(const DeskBatches&)) {
    return [&, fn] {
      ensure_desk();
      if (!desk_ready) {
        Outcome o;
        o.fail("batch failed: " + desk_error);
        return o;
      }
      return fn(desk);
    };
  };

  const std::vector<Entry> entries = {
      {1, "Welch t-test reproduces the reference comparison", criterion1},
      {2, "Wilcoxon normal approximation", criterion2},
      {3, "benchmark optima and lower bounds", criterion3},
      {4, "desk-scale SJaya success (sphere, bohachevsky2)", with_desk(criterion4)},
      {5, "desk-scale first-hit direction SJaya < Jaya", with_desk(criterion5)},
      {6, "fuel cell SJaya pop 30 gens 100", criterion6},
      {7, "run invariants on small instances", criterion7},
  };

  int failures = 0;
  for (const auto& e : entries) {
    Outcome o;
    try {
      o = e.check();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", e.id, e.title, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, entries.size());
  return failures == 0 ? 0 : 1;
}
