#pragma once

// Experiment grids in TOML:
//
//   [defaults]              # optional, applies to every experiment
//   runs = 30
//   base_seed = 1
//
//   [[experiment]]
//   problem = "sphere"
//   pop = 100
//   gens = 3000
//   runs = 30               # optional
//   variants = ["jaya", "sjaya"]
//   base_seed = 1           # optional
//   r_schedule = "per_generation"   # optional
//   integer_rounding = true          # optional, fuel cell only

#include <filesystem>
#include <string>
#include <vector>

#include "sjaya/harness.hpp"

namespace sjaya::harness {

/// One ExperimentRow per (experiment, variant), in file order.
/// Throws ConfigError on malformed grids.
std::vector<ExperimentRow> parse_grid(const std::string& toml_text);
std::vector<ExperimentRow> load_grid(const std::filesystem::path& path);

}  // namespace sjaya::harness
