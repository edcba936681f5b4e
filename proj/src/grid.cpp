#include "sjaya/grid.hpp"

#include <toml.hpp>

namespace sjaya::harness {

namespace {

template <typename T>
T require(const toml::table& t, const char* key, std::size_t index) {
  if (auto v = t[key].value<T>()) return *v;
  throw ConfigError("experiment " + std::to_string(index) + ": missing or invalid '" + key + "'");
}

template <typename T>
T optional_value(const toml::table& t, const toml::table& defaults, const char* key, T fallback) {
  if (t.contains(key)) {
    if (auto v = t[key].value<T>()) return *v;
    throw ConfigError(std::string("invalid value for '") + key + "'");
  }
  if (auto v = defaults[key].value<T>()) return *v;
  return fallback;
}

std::size_t as_count(std::int64_t v, const char* key) {
  if (v < 0) throw ConfigError(std::string("'") + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

std::vector<ExperimentRow> parse_rows(const std::string& toml_text) {
  toml::table doc;
  try {
    doc = toml::parse(toml_text);
  } catch (const toml::parse_error& err) {
    throw ConfigError("grid: " + std::string(err.description()));
  }

  toml::table defaults;
  if (const auto* d = doc["defaults"].as_table()) defaults = *d;

  const auto* experiments = doc["experiment"].as_array();
  if (experiments == nullptr || experiments->empty())
    throw ConfigError("grid: no [[experiment]] entries");

  std::vector<ExperimentRow> rows;
  std::size_t index = 0;
  for (const auto& node : *experiments) {
    const auto* t = node.as_table();
    if (t == nullptr) throw ConfigError("grid: experiment entries must be tables");

    ExperimentRow base;
    base.problem = require<std::string>(*t, "problem", index);
    base.pop = as_count(require<std::int64_t>(*t, "pop", index), "pop");
    base.gens = as_count(require<std::int64_t>(*t, "gens", index), "gens");
    base.runs = as_count(optional_value<std::int64_t>(*t, defaults, "runs", 30), "runs");
    base.base_seed = static_cast<std::uint64_t>(
        as_count(optional_value<std::int64_t>(*t, defaults, "base_seed", 0), "base_seed"));
    base.r_schedule = parse_r_schedule(
        optional_value<std::string>(*t, defaults, "r_schedule", "per_generation"));
    base.integer_rounding = optional_value<bool>(*t, defaults, "integer_rounding", true);

    std::vector<Variant> variants;
    const toml::array* list = (*t)["variants"].as_array();
    if (list == nullptr) list = defaults["variants"].as_array();
    if (list == nullptr) {
      variants = {Variant::Jaya, Variant::SJaya};
    } else {
      for (const auto& v : *list) {
        auto name = v.value<std::string>();
        if (!name) throw ConfigError("grid: variants must be strings");
        variants.push_back(parse_variant(*name));
      }
    }

    for (Variant v : variants) {
      ExperimentRow row = base;
      row.variant = v;
      row.validate();
      rows.push_back(row);
    }
    ++index;
  }
  return rows;
}

}  // namespace

std::vector<ExperimentRow> parse_grid(const std::string& toml_text) {
  try {
    return parse_rows(toml_text);
  } catch (const UsageError& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
}

std::vector<ExperimentRow> load_grid(const std::filesystem::path& path) {
  return parse_grid(read_file(path));
}

}  // namespace sjaya::harness
