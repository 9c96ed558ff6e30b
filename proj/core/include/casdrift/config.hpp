#pragma once

#include <optional>
#include <string>

#include "casdrift/quadrature.hpp"
#include "casdrift/units.hpp"

namespace casdrift {

/// Sweep over one input variable.
struct SweepSpec {
  enum class Variable { Gap, Beta, T1, T2 };
  Variable variable = Variable::Gap;
  double from = 0.0;
  double to = 0.0;
  int count = 1;
  bool log_spacing = false;

  std::vector<double> grid() const;
};
const char* sweep_variable_name(SweepSpec::Variable v);

/// One plate in SI units: response models (rad/s coefficients) and Kelvin.
struct PlateConfigSI {
  DispersionModel epsilon = DispersionModel::vacuum(ResponseRole::Permittivity);
  DispersionModel mu = DispersionModel::vacuum(ResponseRole::Permeability);
  double temperature_K = 0.0;
};

/// Full run configuration as read from the config file.
struct RunConfig {
  double gap_m = 1e-6;
  double beta = 0.0;
  PlateConfigSI plate1, plate2;
  IntegrationPlan plan;
  std::string output_format = "json";  // "json" or "csv"
  std::string output_path;             // empty = stdout
  std::optional<SweepSpec> sweep;

  /// Internal-unit cavity for a given gap (the sweep changes the gap).
  Cavity internal(double gap_m_override) const;
  Cavity internal() const { return internal(gap_m); }
};

/// Parses and validates a JSON config. Unknown keys, wrong types and
/// out-of-range values are rejected; errors carry the JSON pointer path.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

/// Canonical JSON echo of the inputs (round-trips through parse_config).
std::string config_to_json(const RunConfig& config);

}  // namespace casdrift
