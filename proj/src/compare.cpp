#include "sjaya/compare.hpp"

#include <map>
#include <tuple>

namespace sjaya::compare {

namespace {

using harness::BatchSummary;
using Key = std::tuple<std::string, std::size_t, std::size_t>;

Key key_of(const BatchSummary& s) { return {s.function, s.pop, s.gens}; }

std::string describe_key(const Key& k) {
  return std::get<0>(k) + " pop=" + std::to_string(std::get<1>(k)) +
         " gens=" + std::to_string(std::get<2>(k));
}

// Pairs in Jaya table order.
std::vector<std::pair<const BatchSummary*, const BatchSummary*>> pair_rows(
    std::span<const BatchSummary> jaya, std::span<const BatchSummary> sjaya) {
  std::map<Key, const BatchSummary*> by_key;
  for (const auto& s : sjaya)
    if (!by_key.emplace(key_of(s), &s).second)
      throw harness::ParseError("duplicate SJaya row: " + describe_key(key_of(s)));
  if (jaya.size() != sjaya.size())
    throw harness::ParseError("Jaya and SJaya tables have different row counts (" +
                              std::to_string(jaya.size()) + " vs " + std::to_string(sjaya.size()) + ")");
  std::vector<std::pair<const BatchSummary*, const BatchSummary*>> out;
  for (const auto& j : jaya) {
    auto it = by_key.find(key_of(j));
    if (it == by_key.end())
      throw harness::ParseError("no SJaya row for " + describe_key(key_of(j)));
    out.emplace_back(&j, it->second);
  }
  return out;
}

std::string cell(const std::optional<double>& v, bool rounded) {
  if (!v) return rounded ? "---" : "";
  return rounded ? harness::format_rounded(*v) : harness::format_exact(*v);
}

}  // namespace

std::vector<WelchRow> welch_rows(std::span<const BatchSummary> jaya,
                                 std::span<const BatchSummary> sjaya, std::size_t runs) {
  std::vector<WelchRow> out;
  for (const auto& [j, s] : pair_rows(jaya, sjaya)) {
    WelchRow row{j->function, j->pop, j->gens, std::nullopt, std::nullopt};
    row.fitness = stats::welch_test({j->fitness.mean, j->fitness.std, runs},
                                    {s->fitness.mean, s->fitness.std, runs});
    if (j->first_hit && s->first_hit)
      row.first_hit = stats::welch_test({j->first_hit->mean, j->first_hit->std, j->success},
                                        {s->first_hit->mean, s->first_hit->std, s->success});
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<MetricWilcoxon> wilcoxon_over_means(std::span<const BatchSummary> jaya,
                                                std::span<const BatchSummary> sjaya) {
  std::vector<std::pair<double, double>> fitness;
  std::vector<std::pair<double, double>> hits;
  for (const auto& [j, s] : pair_rows(jaya, sjaya)) {
    fitness.emplace_back(j->fitness.mean, s->fitness.mean);
    if (j->first_hit && s->first_hit) hits.emplace_back(j->first_hit->mean, s->first_hit->mean);
  }
  return {{"mean_best_of_run_fitness", stats::wilcoxon(fitness)},
          {"mean_first_hit_evals", stats::wilcoxon(hits)}};
}

MetricWilcoxon wilcoxon_over_runs(std::span<const harness::RunRecord> jaya,
                                  std::span<const harness::RunRecord> sjaya) {
  std::map<std::uint64_t, double> by_seed;
  for (const auto& r : sjaya) by_seed[r.seed] = r.best_fitness;
  if (by_seed.size() != jaya.size())
    throw harness::ParseError("per-run files cover different numbers of seeds");
  std::vector<std::pair<double, double>> pairs;
  for (const auto& r : jaya) {
    auto it = by_seed.find(r.seed);
    if (it == by_seed.end()) throw harness::ParseError("no SJaya run with seed " + std::to_string(r.seed));
    pairs.emplace_back(r.best_fitness, it->second);
  }
  return {"best_of_run_fitness_by_seed", stats::wilcoxon(pairs)};
}

std::string welch_csv(std::span<const WelchRow> rows) {
  std::string out = std::string(kWelchHeader) + "\n";
  auto t = [](const auto& r) { return r ? std::optional<double>(r->t) : std::nullopt; };
  auto p = [](const auto& r) { return r ? std::optional<double>(r->p) : std::nullopt; };
  auto df = [](const auto& r) { return r ? std::optional<double>(r->df) : std::nullopt; };
  for (const auto& r : rows)
    out += r.function + "," + std::to_string(r.pop) + "," + std::to_string(r.gens) + "," +
           cell(t(r.fitness), false) + "," + cell(p(r.fitness), false) + "," +
           cell(t(r.first_hit), false) + "," + cell(p(r.first_hit), false) + "," +
           cell(df(r.fitness), false) + "," + cell(df(r.first_hit), false) + "\n";
  return out;
}

std::string welch_markdown(std::span<const WelchRow> rows) {
  std::string out =
      "| function | pop | gens | fit_t | fit_p | fhe_t | fhe_p |\n"
      "|---|---:|---:|---:|---:|---:|---:|\n";
  auto t = [](const auto& r) { return r ? std::optional<double>(r->t) : std::nullopt; };
  auto p = [](const auto& r) { return r ? std::optional<double>(r->p) : std::nullopt; };
  for (const auto& r : rows)
    out += "| " + r.function + " | " + std::to_string(r.pop) + " | " + std::to_string(r.gens) +
           " | " + cell(t(r.fitness), true) + " | " + cell(p(r.fitness), true) + " | " +
           cell(t(r.first_hit), true) + " | " + cell(p(r.first_hit), true) + " |\n";
  return out;
}

std::string wilcoxon_csv(std::span<const MetricWilcoxon> rows) {
  std::string out = std::string(kWilcoxonHeader) + "\n";
  for (const auto& [metric, w] : rows) {
    out += metric + "," + std::to_string(w.n_zero_diffs) + "," + std::to_string(w.n_effective) + ",";
    if (w.degenerate()) {
      out += ",,,,,,,,\n";
      continue;
    }
    out += harness::format_exact(w.w_plus) + "," + harness::format_exact(w.w_minus) + "," +
           harness::format_exact(w.w) + "," + harness::format_exact(w.alpha) + "," +
           (w.critical_w ? std::to_string(*w.critical_w) : std::string()) + ",";
    if (w.approximation)
      out += harness::format_exact(w.approximation->mean_w) + "," +
             harness::format_exact(w.approximation->std_w) + "," +
             harness::format_exact(w.approximation->z) + "," +
             harness::format_exact(w.approximation->p);
    else
      out += ",,,";
    out += "\n";
  }
  return out;
}

std::string wilcoxon_markdown(std::span<const MetricWilcoxon> rows) {
  std::string out =
      "| metric | zero_diffs | n | W+ | W- | W | alpha | critical W | mean W | std W | z | p |\n"
      "|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& [metric, w] : rows) {
    out += "| " + metric + " | " + std::to_string(w.n_zero_diffs) + " | " +
           std::to_string(w.n_effective) + " | ";
    if (w.degenerate()) {
      out += "--- | --- | --- | --- | --- | --- | --- | --- | --- |\n";
      continue;
    }
    out += harness::format_exact(w.w_plus) + " | " + harness::format_exact(w.w_minus) + " | " +
           harness::format_exact(w.w) + " | 0.05 | " +
           (w.critical_w ? std::to_string(*w.critical_w) : std::string("---")) + " | ";
    if (w.approximation)
      out += harness::format_rounded(w.approximation->mean_w) + " | " +
             harness::format_rounded(w.approximation->std_w) + " | " +
             harness::format_rounded(w.approximation->z) + " | " +
             harness::format_rounded(w.approximation->p) + " |\n";
    else
      out += "--- | --- | --- | --- |\n";
  }
  return out;
}

}  // namespace sjaya::compare
