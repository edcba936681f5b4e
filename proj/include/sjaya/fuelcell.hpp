#pragma once

// PEM fuel cell stack design: polarization model, maximum power point and the
// penalized stack cost, exposed as a three-variable Problem over
// (N_s, N_p, A_cell).
//
// Units: current densities in mA/cm^2, area-specific resistance in kOhm*cm^2
// (so density * r_a is in volts), cell area in cm^2, power in W.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "sjaya/types.hpp"

namespace sjaya::fuelcell {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct StackDesign {
  double n_series = 1.0;    // N_s, cells in series per group
  double n_parallel = 1.0;  // N_p, groups in parallel
  double cell_area = 10.0;  // A_cell, cm^2
};

/// Box of the design variables, ordered (N_s, N_p, A_cell).
Bounds design_bounds();

struct CellParams {
  double e_nernst = 1.04;     // V
  double a = 0.05;            // V, activation (Tafel) coefficient
  double b = 0.08;            // V, concentration coefficient
  double r_a = 98.0e-6;       // kOhm*cm^2
  double i_limit_d = 129.0;   // mA/cm^2
  double i_0_d = 0.21;        // mA/cm^2
  double i_n_d = 1.26;        // mA/cm^2, internal current density
  double v_load_rated = 12.0; // V
  double p_load_rated = 200.0;// W
  double k_n = 0.5;
  double k_diff = 10.0;
  double k_a = 0.001;
  double c = 200.0;           // penalty weight per missing watt

  /// Throws ConfigError unless every value is positive and i_n_d < i_limit_d.
  void validate() const;
};

/// Defaults overridden by any keys present in a JSON or TOML document
/// (chosen by file extension). Keys are the CellParams member names.
CellParams load_params(const std::filesystem::path& path);
CellParams params_from_json(const std::string& text);
CellParams params_from_toml(const std::string& text);

struct PowerPoint {
  double p_load_max = 0.0;  // W
  double v_load_mpp = 0.0;  // V
  double i_at_mpp = 0.0;    // mA/cm^2, stack load current density
};

/// Stack voltage at load current density i_load_d. Throws DomainError when
/// i_load_d < 0 or the logarithm arguments leave their domain.
double stack_voltage(double i_load_d, const StackDesign& design, const CellParams& params);

/// Largest load current density (exclusive) swept by max_power_point.
double sweep_limit(const StackDesign& design, const CellParams& params);

inline constexpr std::size_t kSweepPoints = 10'000;
inline constexpr int kGoldenIterations = 60;

/// Coarse uniform sweep over [0, sweep_limit) followed by golden-section
/// refinement around the best grid point. The refined power is never below
/// the coarse maximum.
PowerPoint max_power_point(const StackDesign& design, const CellParams& params);

struct CostOptions {
  bool integer_rounding = true;  // round N_s and N_p to the nearest integer
};

/// Penalized cost. Throws UsageError when the design is outside the box.
double stack_cost(const StackDesign& design, const CellParams& params,
                  const CostOptions& options = {});

/// Penalty term alone, as a function of the achieved maximum power.
double penalty(double p_load_max, const CellParams& params);

inline constexpr double kSuccessCost = 13.62;
inline constexpr double kBestKnownCost = 13.6157;

Problem make_problem(const CellParams& params = {}, const CostOptions& options = {});

}  // namespace sjaya::fuelcell
