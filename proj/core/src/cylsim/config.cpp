#include "ssblow/cylsim/config.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "ssblow/cylsim/velocity.hpp"
#include "ssblow/errors.hpp"
#include "ssblow/grid_io.hpp"

namespace ssblow::cylsim {

namespace {

void only_keys(const YAML::Node& node, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!node.IsMap()) throw ParseError("'" + where + "' must be a mapping");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!ok.count(key)) throw ParseError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
void read(const YAML::Node& node, const char* key, T& out) {
  if (!node[key]) return;
  try {
    out = node[key].as<T>();
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

struct PresetSpec {
  const char* name;
  std::map<std::string, double> defaults;
};

const std::vector<PresetSpec>& presets() {
  static const std::vector<PresetSpec> list{
      {"swirl_bump", {{"amplitude", 1.0}, {"r0", 0.9}, {"z0", 0.0}, {"width", 0.1}}},
      {"parity", {{"amplitude", 1.0}, {"vorticity", 0.5}, {"r0", 0.9}, {"width", 0.1}}},
  };
  return list;
}

std::map<std::string, double> resolved_params(const InitialData& initial) {
  for (const auto& p : presets()) {
    if (initial.preset != p.name) continue;
    auto params = p.defaults;
    for (const auto& [k, v] : initial.params) {
      if (!params.count(k)) throw ParseError("preset '" + initial.preset + "' has no parameter '" + k + "'");
      params[k] = v;
    }
    return params;
  }
  throw ParseError("unknown initial-data preset '" + initial.preset + "'");
}

}  // namespace

SimConfig parse_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("invalid YAML: ") + e.what());
  }
  SimConfig c;
  if (root.IsNull()) return c;
  only_keys(root, "config", {"grid", "time", "output", "dissipation", "omega_cap", "initial"});
  if (const auto g = root["grid"]) {
    only_keys(g, "grid", {"nr", "nz", "r_min", "z_len", "z_boundary"});
    read(g, "nr", c.grid.nr);
    read(g, "nz", c.grid.nz);
    read(g, "r_min", c.grid.r_min);
    read(g, "z_len", c.grid.z_len);
    if (g["z_boundary"]) c.grid.z_boundary = parse_z_boundary(g["z_boundary"].as<std::string>());
  }
  if (const auto t = root["time"]) {
    only_keys(t, "time", {"dt", "cfl", "dt_max", "t_end"});
    if (t["dt"]) {
      double dt = 0.0;
      read(t, "dt", dt);
      c.dt = dt;
    }
    read(t, "cfl", c.cfl);
    read(t, "dt_max", c.dt_max);
    read(t, "t_end", c.t_end);
  }
  if (const auto o = root["output"]) {
    only_keys(o, "output", {"sample_every", "snapshot_every"});
    read(o, "sample_every", c.sample_every);
    read(o, "snapshot_every", c.snapshot_every);
  }
  read(root, "dissipation", c.dissipation);
  read(root, "omega_cap", c.omega_cap);
  if (const auto init = root["initial"]) {
    if (!init.IsMap()) throw ParseError("'initial' must be a mapping");
    for (const auto& kv : init) {
      const auto key = kv.first.as<std::string>();
      if (key == "preset") {
        c.initial.preset = kv.second.as<std::string>();
      } else {
        try {
          c.initial.params[key] = kv.second.as<double>();
        } catch (const YAML::Exception&) {
          throw ParseError("initial-data parameter '" + key + "' must be a number");
        }
      }
    }
  }
  c.grid.validate();
  resolved_params(c.initial);
  if (c.dt && !(*c.dt > 0.0)) throw ParseError("dt must be positive");
  if (!(c.t_end > 0.0) || !(c.cfl > 0.0) || !(c.dt_max > 0.0)) throw ParseError("t_end, cfl and dt_max must be positive");
  if (c.sample_every == 0) throw ParseError("sample_every must be at least 1");
  return c;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

nlohmann::json to_json(const SimConfig& c) {
  nlohmann::json j;
  j["grid"] = {{"nr", c.grid.nr},
               {"nz", c.grid.nz},
               {"r_min", c.grid.r_min},
               {"z_len", c.grid.z_len},
               {"z_boundary", z_boundary_name(c.grid.z_boundary)}};
  j["time"] = {{"cfl", c.cfl}, {"dt_max", c.dt_max}, {"t_end", c.t_end}};
  if (c.dt) j["time"]["dt"] = *c.dt;
  j["output"] = {{"sample_every", c.sample_every}, {"snapshot_every", c.snapshot_every}};
  j["dissipation"] = c.dissipation;
  j["omega_cap"] = c.omega_cap;
  j["initial"] = {{"preset", c.initial.preset}, {"params", resolved_params(c.initial)}};
  return j;
}

std::pair<ScalarField2D, ScalarField2D> initial_fields(const InitialData& initial, const CylGrid& grid) {
  const auto p = resolved_params(initial);
  const double pi = 4.0 * std::atan(1.0);
  const double w2 = p.at("width") * p.at("width");
  if (initial.preset == "swirl_bump") {
    const double A = p.at("amplitude"), r0 = p.at("r0"), z0 = p.at("z0");
    auto u = grid.sample([&](double r, double z) { return A * std::exp(-((r - r0) * (r - r0) + (z - z0) * (z - z0)) / w2); });
    return {std::move(u), grid.zeros()};
  }
  const double A = p.at("amplitude"), B = p.at("vorticity"), r0 = p.at("r0"), k = pi / grid.z_len;
  auto u = grid.sample([&](double r, double z) { return A * std::exp(-(r - r0) * (r - r0) / w2) * std::cos(k * z); });
  auto w = grid.sample([&](double r, double z) { return B * std::exp(-(r - r0) * (r - r0) / w2) * std::sin(k * z); });
  return {std::move(u), std::move(w)};
}

void write_series_csv(std::ostream& out, const BlowupSeries& series) {
  out << "t,max_omega1,max_u1,delta,box_rmin,box_rmax,box_zmin,box_zmax\n";
  out << std::setprecision(17);
  for (const auto& s : series.samples) {
    out << s.t << ',' << s.max_omega << ',' << s.max_u << ',' << s.delta << ',' << s.box.r_min << ','
        << s.box.r_max << ',' << s.box.z_min << ',' << s.box.z_max << '\n';
  }
}

BlowupSeries read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,max_omega1,max_u1,delta,box_rmin,box_rmax,box_zmin,box_zmax")
    throw ParseError("series CSV has an unexpected header");
  BlowupSeries series;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::array<double, 8> v{};
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::string cell;
      if (!std::getline(fields, cell, ',')) throw ParseError("series CSV row " + std::to_string(row) + " is short");
      try {
        std::size_t used = 0;
        v[k] = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("series CSV row " + std::to_string(row) + ": bad number '" + cell + "'");
      }
    }
    series.samples.push_back({v[0], v[1], v[2], v[3], {v[4], v[5], v[6], v[7]}});
  }
  return series;
}

SimulationResult run_simulation(const SimConfig& config, const std::optional<std::filesystem::path>& out_dir) {
  config.grid.validate();
  StepOptions opts;
  opts.cfl = config.cfl;
  opts.dissipation = config.dissipation;
  const Stepper stepper(config.grid, opts);
  auto [u0, w0] = initial_fields(config.initial, config.grid);

  SimulationResult res;
  res.final_state = stepper.make_state(std::move(u0), std::move(w0));
  CylState& s = res.final_state;

  auto snapshot = [&](std::size_t index) {
    if (!out_dir) return;
    std::ostringstream stem;
    stem << "snapshot_" << std::setw(5) << std::setfill('0') << index;
    for (const auto& [name, field] : {std::pair{"u1", &s.u1}, std::pair{"omega1", &s.omega1}, std::pair{"psi1", &s.psi1}}) {
      const auto path = *out_dir / (stem.str() + "_" + name + ".bin");
      write_grid_binary(path, *field);
      res.files.push_back(path);
    }
  };
  auto record = [&] {
    if (s.omega1.max_abs() > 0.0) res.series.samples.push_back(sample_blowup(s, config.grid));
  };

  record();
  if (config.snapshot_every > 0) snapshot(0);
  res.stop_reason = "t_end";
  while (s.t < config.t_end * (1.0 - 1e-14)) {
    double dt = config.dt ? *config.dt : std::min(config.dt_max, stepper.max_stable_dt(s));
    dt = std::min(dt, config.t_end - s.t);
    s = stepper.step(s, dt);
    ++res.steps;
    if (res.steps % config.sample_every == 0) record();
    if (config.snapshot_every > 0 && res.steps % config.snapshot_every == 0) snapshot(res.steps / config.snapshot_every);
    if (s.omega1.max_abs() > config.omega_cap) {
      res.stop_reason = "omega_cap";
      break;
    }
  }
  if (res.series.samples.empty() || res.series.samples.back().t != s.t) record();

  if (out_dir) {
    const auto path = *out_dir / "series.csv";
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_series_csv(out, res.series);
    res.files.push_back(path);
  }
  return res;
}

}  // namespace ssblow::cylsim
