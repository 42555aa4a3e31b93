#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssblow/cylsim/blowup.hpp"
#include "ssblow/cylsim/grid.hpp"
#include "ssblow/cylsim/stepper.hpp"

namespace ssblow::cylsim {

struct InitialData {
  /// "swirl_bump" or "parity".
  std::string preset = "swirl_bump";
  std::map<std::string, double> params;
};

struct SimConfig {
  CylGrid grid;
  /// Fixed step; when absent dt follows cfl·min(hr, hz)/max|u|.
  std::optional<double> dt;
  double cfl = 0.4;
  double dt_max = 1e-2;
  double t_end = 1.0;
  std::size_t sample_every = 5;
  /// 0 disables snapshots.
  std::size_t snapshot_every = 0;
  double dissipation = 0.0;
  /// Stop once max|ω₁| passes this.
  double omega_cap = 1e6;
  InitialData initial;
};

/// Reads YAML; missing keys keep defaults, unknown keys raise ParseError.
SimConfig load_config(const std::filesystem::path& path);
SimConfig parse_config(const std::string& yaml_text);
nlohmann::json to_json(const SimConfig& config);

/// Preset initial (u₁, ω₁). Throws ParseError for unknown presets or
/// parameters.
std::pair<ScalarField2D, ScalarField2D> initial_fields(const InitialData& initial, const CylGrid& grid);

struct SimulationResult {
  BlowupSeries series;
  CylState final_state;
  std::size_t steps = 0;
  std::string stop_reason;
  std::vector<std::filesystem::path> files;
};

/// Runs the configured simulation. With an output directory it writes
/// series.csv and any snapshots there.
SimulationResult run_simulation(const SimConfig& config, const std::optional<std::filesystem::path>& out_dir = {});

void write_series_csv(std::ostream& out, const BlowupSeries& series);
/// Reads the series CSV back; throws ParseError on a bad header or row.
BlowupSeries read_series_csv(std::istream& in);

}  // namespace ssblow::cylsim
