#include "sjaya/fuelcell.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <toml.hpp>

namespace sjaya::fuelcell {

namespace {

constexpr double kSweepFraction = 0.9999;

template <typename Lookup>
CellParams apply_overrides(Lookup&& lookup) {
  CellParams p;
  const std::pair<const char*, double*> fields[] = {
      {"e_nernst", &p.e_nernst},   {"a", &p.a},
      {"b", &p.b},                 {"r_a", &p.r_a},
      {"i_limit_d", &p.i_limit_d}, {"i_0_d", &p.i_0_d},
      {"i_n_d", &p.i_n_d},         {"v_load_rated", &p.v_load_rated},
      {"p_load_rated", &p.p_load_rated}, {"k_n", &p.k_n},
      {"k_diff", &p.k_diff},       {"k_a", &p.k_a},
      {"c", &p.c},
  };
  for (auto [key, slot] : fields) lookup(key, *slot);
  p.validate();
  return p;
}

double load_power(double i_load_d, const StackDesign& design, const CellParams& params) {
  return stack_voltage(i_load_d, design, params) * i_load_d * design.cell_area / 1000.0;
}

}  // namespace

Bounds design_bounds() { return Bounds({1.0, 1.0, 10.0}, {50.0, 50.0, 400.0}); }

void CellParams::validate() const {
  const double values[] = {e_nernst, a, b, r_a, i_limit_d, i_0_d, i_n_d, v_load_rated,
                           p_load_rated, k_n, k_diff, k_a, c};
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError("fuel cell parameters must be finite and positive");
  if (!(i_n_d < i_limit_d)) throw ConfigError("i_n_d must be below i_limit_d");
}

CellParams params_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object()) throw ConfigError("fuel cell parameters: expected a JSON object");
  return apply_overrides([&](const char* key, double& slot) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number()) throw ConfigError(std::string("parameter '") + key + "' must be a number");
      slot = it->get<double>();
    }
  });
}

CellParams params_from_toml(const std::string& text) {
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& err) {
    throw ConfigError(std::string("fuel cell parameters: ") + std::string(err.description()));
  }
  return apply_overrides([&](const char* key, double& slot) {
    if (const toml::node* node = doc.get(key)) {
      if (auto v = node->value<double>()) slot = *v;
      else throw ConfigError(std::string("parameter '") + key + "' must be a number");
    }
  });
}

CellParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open parameter file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".toml") return params_from_toml(buffer.str());
  return params_from_json(buffer.str());
}

double stack_voltage(double i_load_d, const StackDesign& design, const CellParams& params) {
  const double density = i_load_d / design.n_parallel + params.i_n_d;
  if (!(i_load_d >= 0.0) || !(density > 0.0) || !(density < params.i_limit_d))
    throw DomainError("load current density " + std::to_string(i_load_d) +
                      " outside the polarization model's domain");
  const double cell = params.e_nernst - params.a * std::log(density / params.i_0_d) +
                      params.b * std::log(1.0 - density / params.i_limit_d) -
                      density * params.r_a;
  return design.n_series * cell;
}

double sweep_limit(const StackDesign& design, const CellParams& params) {
  return kSweepFraction * design.n_parallel * (params.i_limit_d - params.i_n_d);
}

PowerPoint max_power_point(const StackDesign& design, const CellParams& params) {
  const double limit = sweep_limit(design, params);
  const double step = limit / static_cast<double>(kSweepPoints);

  std::size_t best_k = 0;
  double best_p = load_power(0.0, design, params);
  for (std::size_t k = 1; k < kSweepPoints; ++k) {
    const double p = load_power(step * static_cast<double>(k), design, params);
    if (p > best_p) {
      best_p = p;
      best_k = k;
    }
  }
  double best_i = step * static_cast<double>(best_k);

  // Golden-section search on the two grid cells around the coarse maximum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_k == 0 ? 0.0 : step * static_cast<double>(best_k - 1);
  double hi = std::min(limit, step * static_cast<double>(best_k + 1));
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double p1 = load_power(x1, design, params);
  double p2 = load_power(x2, design, params);
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (p1 < p2) {
      lo = x1;
      x1 = x2;
      p1 = p2;
      x2 = lo + inv_phi * (hi - lo);
      p2 = load_power(x2, design, params);
    } else {
      hi = x2;
      x2 = x1;
      p2 = p1;
      x1 = hi - inv_phi * (hi - lo);
      p1 = load_power(x1, design, params);
    }
  }
  const double refined_i = p1 >= p2 ? x1 : x2;
  const double refined_p = std::max(p1, p2);
  if (refined_p > best_p) {
    best_p = refined_p;
    best_i = refined_i;
  }

  return PowerPoint{best_p, stack_voltage(best_i, design, params), best_i};
}

double penalty(double p_load_max, const CellParams& params) {
  return p_load_max >= params.p_load_rated ? 0.0 : params.c * (params.p_load_rated - p_load_max);
}

double stack_cost(const StackDesign& design, const CellParams& params, const CostOptions& options) {
  const double x[] = {design.n_series, design.n_parallel, design.cell_area};
  if (!design_bounds().contains(x))
    throw UsageError("stack design outside the design box");

  StackDesign evaluated = design;
  if (options.integer_rounding) {
    evaluated.n_series = std::round(design.n_series);
    evaluated.n_parallel = std::round(design.n_parallel);
  }
  const PowerPoint mpp = max_power_point(evaluated, params);
  return params.k_n * evaluated.n_parallel * evaluated.n_series +
         params.k_diff * std::abs(params.v_load_rated - mpp.v_load_mpp) +
         params.k_a * evaluated.cell_area + penalty(mpp.p_load_max, params);
}

Problem make_problem(const CellParams& params, const CostOptions& options) {
  params.validate();
  return Problem{"fuelcell", design_bounds(),
                 [params, options](std::span<const double> x) {
                   if (x.size() != 3) throw UsageError("fuel cell design has three variables");
                   return stack_cost({x[0], x[1], x[2]}, params, options);
                 },
                 std::nullopt, SuccessTarget::at_most(kSuccessCost)};
}

}  // namespace sjaya::fuelcell
