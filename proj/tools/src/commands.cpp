#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "ssblow/cylsim/blowup.hpp"
#include "ssblow/cylsim/config.hpp"
#include "ssblow/cylsim/demo1d.hpp"
#include "ssblow/cylsim/scaling.hpp"
#include "ssblow/hierarchy/report.hpp"
#include "ssblow/rational.hpp"
#include "ssblow/rigidity/report.hpp"
#include "ssblow/sscalc/serialize.hpp"
#include "svg.hpp"

namespace ssblow::cli {

namespace {

constexpr const char* kCylsimSchema = "cylsim/1";

Rational positive_gamma(const std::string& text) {
  const Rational g = parse_rational(text);
  if (sgn(g) <= 0) throw UsageError("gamma must be positive, got " + text);
  return g;
}

nlohmann::json rational_json(const Rational& q) { return {{"text", to_string(q)}, {"value", q.get_d()}}; }

nlohmann::json fit_json(const LinearFit& f) { return {{"slope", f.slope}, {"intercept", f.intercept}, {"ssr", f.ssr}}; }

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + parts[k];
  return s;
}

}  // namespace

Context::Context(std::filesystem::path out_dir, std::ostream& out, bool svg)
    : dir_(std::move(out_dir)), out_(out), svg_(svg) {
  std::filesystem::create_directories(dir_);
}

void Context::record(const std::filesystem::path& file, const std::string& schema) {
  manifest_.outputs.push_back({std::filesystem::relative(file, dir_).generic_string(), schema});
}

void Context::write_text(const std::string& name, const std::string& body, const std::string& schema) {
  const auto path = dir_ / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << body;
  record(path, schema);
}

void Context::write_json(const std::string& name, const nlohmann::json& doc) {
  write_text(name, doc.dump(2) + "\n", doc.at("schema").get<std::string>());
}

void Context::write_csv(const std::string& name, const std::vector<std::string>& header,
                        const std::vector<std::vector<double>>& rows, const std::string& title, bool log_y) {
  std::ostringstream o;
  o << join(header) << '\n' << std::setprecision(17);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) o << (k ? "," : "") << row[k];
    o << '\n';
  }
  write_text(name + ".csv", o.str(), "csv:" + join(header));
  if (!svg_) return;
  std::vector<double> x;
  std::vector<Series> series(header.size() - 1);
  for (std::size_t k = 1; k < header.size(); ++k) series[k - 1].label = header[k];
  for (const auto& row : rows) {
    x.push_back(row[0]);
    for (std::size_t k = 1; k < row.size(); ++k) series[k - 1].y.push_back(row[k]);
  }
  write_text(name + ".svg", svg_line_plot(title, header[0], x, series, log_y), "svg");
}

int cmd_derive(Context& ctx, const DeriveOptions& o) {
  if (o.depth == 0) throw UsageError("--depth must be at least 1");
  const auto mode = hierarchy::parse_mode(o.mode);
  const auto spec = mode == hierarchy::AnsatzMode::Single ? hierarchy::AnsatzSpec::single(o.depth)
                                                          : hierarchy::AnsatzSpec::generalized(o.depth);
  ctx.manifest().config = {{"mode", o.mode}, {"depth", o.depth}, {"format", o.format}};
  const auto report = hierarchy::derive_hierarchy(spec);
  if (o.format == "json" || o.format == "both")
    ctx.write_text("hierarchy.json", hierarchy::emit(report, hierarchy::EmitFormat::Json) + "\n", "hierarchy/1");
  if (o.format == "latex" || o.format == "both")
    ctx.write_text("hierarchy.tex", hierarchy::emit(report, hierarchy::EmitFormat::Latex), "latex");

  auto& out = ctx.out();
  out << "mode " << o.mode << ", depth " << o.depth << ": " << report.orders.size() << " order equations, "
      << report.comparisons.size() << " comparisons\n";
  for (const auto& c : report.comparisons) {
    out << "  " << std::left << std::setw(28) << c.reference << hierarchy::verdict_name(c.verdict) << '\n';
    if (c.verdict == hierarchy::Verdict::Mismatch || c.verdict == hierarchy::Verdict::DocumentedDiscrepancy) {
      out << "    only derived:   " << to_text(c.only_derived) << '\n';
      out << "    only reference: " << to_text(c.only_reference) << '\n';
    }
  }
  const bool ok = report.acceptable();
  out << (ok ? "all comparisons acceptable\n" : "unexpected mismatch\n");
  return ok ? 0 : 1;
}

int cmd_verify(Context& ctx, const VerifyOptions& o) {
  const Rational gamma = positive_gamma(o.gamma);
  if (o.p == 0 || o.p % 2 != 0) throw UsageError("--p must be a positive even integer");
  const bool decay = !o.no_decay;
  ctx.manifest().config = {{"gamma", to_string(gamma)}, {"kmax", o.kmax}, {"p", o.p}, {"assume_decay", decay}};

  const auto table = rigidity::triviality_table(gamma, o.kmax, decay);
  const Rational threshold = rigidity::integral_assumption_threshold(gamma);
  const auto pipeline = rigidity::single_profile_pipeline(gamma);

  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream text;
  text << "gamma = " << to_string(gamma) << ", decay assumption needed only for k <= 1/gamma = " << to_string(threshold)
       << " (integrability exponent p = " << o.p << ")\n";
  text << std::left << std::setw(4) << "k" << std::setw(7) << "field" << std::setw(12) << "coefficient"
       << std::setw(12) << "degree" << std::setw(30) << "branch" << "conclusion\n";
  for (const auto& v : table) {
    auto row = rigidity::to_json(v);
    row["beyond_threshold"] = Rational(v.k) > threshold;
    row["decay_needed"] = v.branch == rigidity::TrivialityCase::ZeroCoefficientRayConstant;
    rows.push_back(row);
    if (decay && v.conclusion != rigidity::Conclusion::TrivialUnderDecay) ok = false;
    text << std::setw(4) << v.k << std::setw(7) << (v.field == sscalc::Field::U ? "U" : "Omega") << std::setw(12)
         << to_string(v.coefficient) << std::setw(12) << to_string(v.degree) << std::setw(30)
         << rigidity::case_name(v.branch) << rigidity::conclusion_name(v.conclusion)
         << (Rational(v.k) > threshold ? "  (k > 1/gamma)" : "") << '\n';
  }
  text << "profile pipeline:\n";
  for (const auto& step : pipeline.steps) {
    text << "  " << std::setw(32) << step.name << (step.holds ? "holds" : "FAILS") << '\n';
    if (!step.holds) ok = false;
  }
  nlohmann::json body{{"gamma", rational_json(gamma)},
                      {"kmax", o.kmax},
                      {"p", o.p},
                      {"assume_decay", decay},
                      {"decay_threshold", rational_json(threshold)},
                      {"table", rows},
                      {"pipeline", rigidity::to_json(pipeline)}};
  ctx.write_json("verify.json", rigidity::rigidity_document("verify", body));
  ctx.write_text("verify.txt", text.str(), "text");
  ctx.out() << text.str();
  return ok ? 0 : 1;
}

int cmd_identity(Context& ctx, const IdentityOptions& o) {
  const auto preset = rigidity::parse_preset(o.preset);
  if (o.p == 0 || o.p % 2 != 0) throw UsageError("--p must be a positive even integer");
  if (o.nR % 2 == 0 || o.nZ % 2 == 0) throw UsageError("--nR and --nZ must be odd (the check coarsens by 2)");
  if (!(o.rho > 0.0)) throw UsageError("--rho must be positive");
  ctx.manifest().config = {{"preset", o.preset}, {"p", o.p},   {"rho", o.rho},
                           {"epsilon", o.epsilon}, {"nR", o.nR}, {"nZ", o.nZ}, {"enforce_bc", !o.no_enforce}};
  rigidity::HalfPlaneGrid grid;
  grid.nR = o.nR;
  grid.nZ = o.nZ;
  const auto in = rigidity::identity_preset(preset, grid, o.epsilon);
  rigidity::IbpOptions opts;
  opts.enforce_boundary_condition = !o.no_enforce;
  const int p = static_cast<int>(o.p);
  const auto verdict = rigidity::ibp_identity_verdict(in.U, in.Psi, in.gamma, p, o.rho, opts);

  nlohmann::json body{{"preset", o.preset},
                      {"description", in.description},
                      {"grid", {{"nR", grid.nR}, {"nZ", grid.nZ}, {"R", {grid.R_min, grid.R_max}}, {"Z", {grid.Z_min, grid.Z_max}}}},
                      {"lhs_minus_rhs", verdict.fine.lhs - verdict.fine.rhs},
                      {"verdict", rigidity::to_json(verdict)}};
  ctx.write_json("identity.json", rigidity::rigidity_document("identity", body));

  // Sweep of the cutoff radius while σ's support stays inside the box.
  const double reach = std::min({-grid.R_min, -grid.Z_min, grid.Z_max});
  std::vector<std::vector<double>> rows;
  for (int k = 1; k <= 8; ++k) {
    const double rho = o.rho * k / 4.0;
    if (2.0 * rho > reach) break;
    const auto r = rigidity::ibp_identity_check(in.U, in.Psi, in.gamma, p, rho, opts);
    rows.push_back({rho, r.lhs, r.rhs, r.boundary_term, r.transport_term});
  }
  ctx.write_csv("identity", {"rho", "lhs", "rhs", "boundary", "transport"}, rows, "identity terms vs cutoff radius");

  const auto& f = verdict.fine;
  ctx.out() << "preset " << o.preset << ": lhs = " << f.lhs << ", rhs = " << f.rhs << ", boundary = " << f.boundary_term
            << ", transport = " << f.transport_term << "\n  balance " << f.balance << " vs tolerance "
            << verdict.tolerance << (verdict.passes ? " (pass)\n" : " (FAIL)\n");
  return verdict.passes ? 0 : 1;
}

int cmd_simulate(Context& ctx, const SimulateOptions& o) {
  cylsim::SimConfig config = o.config ? cylsim::load_config(*o.config) : cylsim::SimConfig{};
  if (o.t_end) {
    if (!(*o.t_end > 0.0)) throw UsageError("--t-end must be positive");
    config.t_end = *o.t_end;
  }
  ctx.manifest().config = cylsim::to_json(config);
  if (o.config) ctx.manifest().config["source"] = *o.config;

  const auto res = cylsim::run_simulation(config, ctx.dir());
  for (const auto& f : res.files) {
    const bool csv = f.extension() == ".csv";
    ctx.record(f, csv ? "csv:t,max_omega1,max_u1,delta,box_rmin,box_rmax,box_zmin,box_zmax" : "grid-binary");
  }

  nlohmann::json body{{"schema", kCylsimSchema},
                      {"kind", "simulate"},
                      {"config", cylsim::to_json(config)},
                      {"initial_data_note", "preset initial data is an artifact choice"},
                      {"steps", res.steps},
                      {"stop_reason", res.stop_reason},
                      {"t_final", res.final_state.t},
                      {"max_omega1", res.final_state.omega1.max_abs()},
                      {"max_u1", res.final_state.u1.max_abs()},
                      {"samples", res.series.samples.size()}};
  try {
    const auto fit = cylsim::track_blowup(res.series);
    body["blowup_fit"] = {{"T", fit.T},
                          {"T_bracketed", fit.T_bracketed},
                          {"gamma", fit.gamma},
                          {"omega_exponent", fit.omega_exponent},
                          {"window", rigidity::to_json(fit.window)}};
  } catch (const FitRejected& e) {
    body["blowup_fit_rejected"] = e.what();
  }
  ctx.write_json("simulate.json", body);

  std::vector<std::vector<double>> rows;
  for (const auto& s : res.series.samples) rows.push_back({s.t, s.max_omega, s.max_u, s.delta});
  ctx.write_csv("simulate_plot", {"t", "max_omega1", "max_u1", "delta"}, rows, "vorticity and swirl maxima");

  ctx.out() << "simulated to t = " << res.final_state.t << " in " << res.steps << " steps (" << res.stop_reason
            << "), max|omega1| = " << res.final_state.omega1.max_abs() << '\n';
  if (body.contains("blowup_fit")) {
    ctx.out() << "  fit: T = " << body["blowup_fit"]["T"] << ", gamma = " << body["blowup_fit"]["gamma"]
              << (body["blowup_fit"]["T_bracketed"].get<bool>() ? "\n" : " (T at the search limit: no blow-up evidence)\n");
  } else {
    ctx.out() << "  no blow-up fit: " << body["blowup_fit_rejected"].get<std::string>() << '\n';
  }
  return 0;
}

int cmd_fit(Context& ctx, const FitOptions& o) {
  if (o.synthetic == o.series.has_value()) throw UsageError("give exactly one of --series or --synthetic");
  cylsim::BlowupSeries series;
  if (o.series) {
    std::ifstream in(*o.series);
    if (!in) throw UsageError("cannot open series " + *o.series);
    series = cylsim::read_series_csv(in);
    ctx.manifest().config = {{"series", *o.series}};
  } else {
    if (o.samples < 2) throw UsageError("--samples must be at least 2");
    std::mt19937_64 rng(o.seed);
    std::normal_distribution<double> noise(0.0, o.noise > 0.0 ? o.noise : 1.0);
    auto factor = [&] { return o.noise > 0.0 ? 1.0 + noise(rng) : 1.0; };
    for (std::size_t k = 0; k < o.samples; ++k) {
      const double tau = std::pow(10.0, -3.0 * static_cast<double>(k) / static_cast<double>(o.samples - 1));
      cylsim::BlowupSample s;
      s.t = o.T - tau;
      s.max_omega = factor() / tau;
      s.delta = std::pow(tau, o.gamma) * factor();
      series.samples.push_back(s);
    }
    ctx.manifest().config = {{"synthetic", true}, {"T", o.T},         {"gamma", o.gamma},
                             {"noise", o.noise},  {"seed", o.seed}, {"samples", o.samples}};
  }
  cylsim::BlowupFitOptions fo;
  fo.reference_gamma = o.reference_gamma;
  if (o.reference_gamma) ctx.manifest().config["reference_gamma"] = *o.reference_gamma;
  const auto fit = cylsim::track_blowup(series, fo);

  ctx.write_json("fit.json", {{"schema", kCylsimSchema},
                              {"kind", "fit"},
                              {"T", fit.T},
                              {"T_bracketed", fit.T_bracketed},
                              {"gamma", fit.gamma},
                              {"omega_exponent", fit.omega_exponent},
                              {"omega_fit", fit_json(fit.omega_fit)},
                              {"delta_fit", fit_json(fit.delta_fit)},
                              {"window", rigidity::to_json(fit.window)}});
  std::vector<std::vector<double>> rows;
  for (const auto& s : series.samples) rows.push_back({std::log(fit.T - s.t), std::log(s.max_omega), std::log(s.delta)});
  ctx.write_csv("fit", {"log_tau", "log_max_omega1", "log_delta"}, rows, "log-log blow-up data");
  ctx.out() << std::setprecision(10) << "T_fit = " << fit.T << ", gamma_fit = " << fit.gamma
            << ", omega exponent = " << fit.omega_exponent << ", window: " << rigidity::window_class_name(fit.window.tag)
            << '\n';
  return 0;
}

int cmd_demo1d(Context& ctx, const Demo1dCliOptions& o) {
  cylsim::Demo1dOptions d;
  d.bc = cylsim::parse_bc1d(o.bc);
  d.n = o.n;
  d.t_end = o.t_end;
  d.amplitude = o.amplitude;
  d.threshold = o.threshold;
  if (d.n < 8) throw UsageError("--n must be at least 8");
  if (!(d.t_end > 0.0) || !(d.threshold > 0.0)) throw UsageError("--t-end and --threshold must be positive");
  ctx.manifest().config = {{"bc", o.bc},           {"n", o.n},
                           {"t_end", o.t_end},     {"amplitude", o.amplitude},
                           {"threshold", o.threshold}};
  const auto r = cylsim::demo_1d(d);
  nlohmann::json body{{"schema", kCylsimSchema},    {"kind", "demo_1d"},     {"bc", o.bc},
                      {"n", r.n},                    {"t_end", o.t_end},      {"t_reached", r.t_reached},
                      {"steps", r.steps},            {"peak_ux", r.peak_ux},  {"threshold", o.threshold},
                      {"blowup_suspected", r.blowup_suspected}};
  body["crossing_time"] = r.crossing_time ? nlohmann::json(*r.crossing_time) : nlohmann::json(nullptr);
  ctx.write_json("demo1d.json", body);
  std::vector<std::vector<double>> rows;
  for (const auto& s : r.history) rows.push_back({s.t, s.max_ux});
  ctx.write_csv("demo1d", {"t", "max_ux"}, rows, "max |u_x| for u_t = u_xx - u_x^4 (" + o.bc + ")", true);
  ctx.out() << o.bc << ", n = " << r.n << ": peak max|u_x| = " << r.peak_ux;
  if (r.crossing_time) ctx.out() << ", crossed " << o.threshold << " at t = " << *r.crossing_time;
  ctx.out() << (r.blowup_suspected ? " (blow-up suspected)\n" : " (bounded)\n");
  return 0;
}

int cmd_scaling(Context& ctx, const ScalingOptions& o) {
  const Rational gamma = positive_gamma(o.gamma);
  ctx.manifest().config = {{"gamma", to_string(gamma)}, {"L", o.L}};
  const auto r = cylsim::energy_scaling(gamma, o.L);
  ctx.write_json("scaling.json", {{"schema", kCylsimSchema},
                                  {"kind", "scaling"},
                                  {"gamma", rational_json(gamma)},
                                  {"exponents",
                                   {{"swirl_energy", rational_json(r.swirl_energy)},
                                    {"gradient_energy", rational_json(r.gradient_energy)},
                                    {"swirl_pointwise", rational_json(r.swirl_pointwise)},
                                    {"gradient_pointwise", rational_json(r.gradient_pointwise)}}},
                                  {"gradient_sublinear", r.gradient_sublinear},
                                  {"swirl_decay", cylsim::swirl_decay_name(r.swirl)},
                                  {"verdicts", r.verdicts}});
  std::vector<std::vector<double>> rows;
  for (const auto& row : r.rows) rows.push_back({row.L, row.swirl_energy_bound, row.gradient_energy_bound});
  ctx.write_csv("scaling", {"L", "swirl_energy_bound", "gradient_energy_bound"}, rows, "energy bounds vs box size", true);

  auto& out = ctx.out();
  auto line = [&](const char* what, const char* formula, const Rational& q) {
    out << "  " << std::left << std::setw(38) << what << formula << " = " << to_string(q) << " ~ " << std::setprecision(3)
        << std::fixed << q.get_d() << std::defaultfloat << std::setprecision(6) << '\n';
  };
  out << "gamma = " << to_string(gamma) << '\n';
  line("averaged |U|^2 over the L-box", "1 - 2/gamma", r.swirl_energy);
  line("averaged |grad Psi|^2 over the L-box", "2 - 2/gamma", r.gradient_energy);
  line("pointwise |U|", "1/2 - 1/gamma", r.swirl_pointwise);
  line("pointwise |grad Psi|", "1 - 1/gamma", r.gradient_pointwise);
  for (const auto& v : r.verdicts) out << "  " << v << '\n';
  return 0;
}

}  // namespace ssblow::cli
