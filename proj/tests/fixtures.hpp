#pragma once

// Loaders for the reference summary tables shipped in data/.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sjaya/harness.hpp"

#ifndef SJAYA_DATA_DIR
#error "SJAYA_DATA_DIR must point at the data/ directory"
#endif

namespace sjaya::testing {

inline std::string data_path(const std::string& name) { return std::string(SJAYA_DATA_DIR) + "/" + name; }

inline std::vector<harness::BatchSummary> load_summary(const std::string& name) {
  return harness::parse_summary_csv(harness::read_file(data_path(name)));
}

struct ReferenceWelch {
  std::string function;
  std::size_t pop = 0;
  std::size_t gens = 0;
  std::optional<double> fit_t, fit_p, fhe_t, fhe_p;
};

inline std::vector<ReferenceWelch> load_reference_welch(const std::string& name) {
  const std::string text = harness::read_file(data_path(name));
  std::vector<ReferenceWelch> rows;
  std::size_t start = text.find('\n') + 1;
  auto cell = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return std::stod(s);
  };
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    const auto f = harness::split_csv_line(line);
    if (f.size() != 7) throw harness::ParseError("bad reference Welch row: " + line);
    rows.push_back({f[0], std::stoul(f[1]), std::stoul(f[2]), cell(f[3]), cell(f[4]), cell(f[5]),
                    cell(f[6])});
  }
  return rows;
}

// Reference t to 1% relative; p within a factor of 1.5 below 1e-6 and to 5%
// relative otherwise.
inline constexpr double kWelchTRel = 0.01;
inline constexpr double kWelchSmallP = 1e-6;
inline constexpr double kWelchSmallPFactor = 1.5;
inline constexpr double kWelchPRel = 0.05;

inline bool t_matches(double ours, double reference) {
  return std::abs(ours - reference) <= kWelchTRel * std::abs(reference);
}

inline bool p_matches(double ours, double reference) {
  if (reference < kWelchSmallP)
    return ours <= reference * kWelchSmallPFactor && ours >= reference / kWelchSmallPFactor;
  return std::abs(ours - reference) <= kWelchPRel * reference;
}

}  // namespace sjaya::testing
