#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "commands.hpp"

namespace ssblow::cli {

namespace {

void error_json(std::ostream& err, std::string_view kind, const std::string& message, int code) {
  err << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const DomainError*>(&e))
    return kUsage;
  if (dynamic_cast<const BoundaryViolation*>(&e)) return kMismatch;
  return kNumeric;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-similar blow-up toolkit for axisymmetric Euler flow near a boundary circle", "ssblow"};
  app.require_subcommand(1);
  std::string out_dir;
  bool svg = false;
  app.add_option("--out", out_dir, "Output directory (default: $SSBLOW_OUT_DIR, else ./ssblow-out)");
  app.add_flag("--svg", svg, "Also render SVG line plots of the CSV data");
  app.set_version_flag("--version", std::string(SSBLOW_VERSION));

  std::function<int(Context&)> run;

  DeriveOptions derive;
  auto* d = app.add_subcommand("derive", "Derive and compare the profile-equation hierarchy");
  d->add_option("--mode", derive.mode, "single or generalized")->check(CLI::IsMember({"single", "generalized"}))->capture_default_str();
  d->add_option("--depth", derive.depth, "Highest order (>= 1)")->check(CLI::PositiveNumber)->capture_default_str();
  d->add_option("--format", derive.format, "json, latex or both")->check(CLI::IsMember({"json", "latex", "both"}))->capture_default_str();
  d->callback([&] { run = [&](Context& c) { return cmd_derive(c, derive); }; });

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Triviality table of the profile hierarchy");
  v->add_option("--gamma", verify.gamma, "Scaling exponent, e.g. 2/5 or 2.91")->required();
  v->add_option("--kmax", verify.kmax, "Largest series index")->capture_default_str();
  v->add_option("--p", verify.p, "Even integrability exponent")->capture_default_str();
  v->add_flag("--no-decay", verify.no_decay, "Drop the decay hypothesis");
  v->callback([&] { run = [&](Context& c) { return cmd_verify(c, verify); }; });

  IdentityOptions identity;
  auto* id = app.add_subcommand("identity", "Integration-by-parts identity on a half-plane grid");
  id->add_option("--preset", identity.preset, "rays or compact")->check(CLI::IsMember({"rays", "compact"}))->capture_default_str();
  id->add_option("--p", identity.p, "Even power")->capture_default_str();
  id->add_option("--rho", identity.rho, "Cutoff radius")->capture_default_str();
  id->add_option("--epsilon", identity.epsilon, "Boundary-condition violation")->capture_default_str();
  id->add_option("--nR", identity.nR, "Nodes in R (odd)")->capture_default_str();
  id->add_option("--nZ", identity.nZ, "Nodes in Z (odd)")->capture_default_str();
  id->add_flag("--no-enforce", identity.no_enforce, "Report the boundary term instead of rejecting the data");
  id->callback([&] { run = [&](Context& c) { return cmd_identity(c, identity); }; });

  SimulateOptions simulate;
  auto* s = app.add_subcommand("simulate", "Run the cylinder-slab solver");
  s->add_option("--config", simulate.config, "YAML configuration file")->check(CLI::ExistingFile);
  s->add_option("--t-end", simulate.t_end, "Override the final time");
  s->callback([&] { run = [&](Context& c) { return cmd_simulate(c, simulate); }; });

  FitOptions fit;
  auto* f = app.add_subcommand("fit", "Fit blow-up time and window exponent to a series");
  f->add_option("--series", fit.series, "Series CSV written by simulate")->check(CLI::ExistingFile);
  f->add_flag("--synthetic", fit.synthetic, "Use a closed-form series instead");
  f->add_option("--T", fit.T, "Synthetic blow-up time")->capture_default_str();
  f->add_option("--gamma", fit.gamma, "Synthetic window exponent")->capture_default_str();
  f->add_option("--noise", fit.noise, "Synthetic multiplicative noise level")->capture_default_str();
  f->add_option("--seed", fit.seed, "Noise seed")->capture_default_str();
  f->add_option("--samples", fit.samples, "Synthetic sample count")->capture_default_str();
  f->add_option("--reference-gamma", fit.reference_gamma, "Judge the window against this exponent");
  f->callback([&] { run = [&](Context& c) { return cmd_fit(c, fit); }; });

  Demo1dCliOptions demo;
  auto* dm = app.add_subcommand("demo-1d", "u_t = u_xx - u_x^4 with periodic or Dirichlet ends");
  dm->add_option("--bc", demo.bc, "periodic or dirichlet")->check(CLI::IsMember({"periodic", "dirichlet"}))->capture_default_str();
  dm->add_option("--n", demo.n, "Grid cells")->capture_default_str();
  dm->add_option("--t-end", demo.t_end, "Final time")->capture_default_str();
  dm->add_option("--amplitude", demo.amplitude, "Dirichlet value at x = 1")->capture_default_str();
  dm->add_option("--threshold", demo.threshold, "Blow-up threshold on max|u_x|")->capture_default_str();
  dm->callback([&] { run = [&](Context& c) { return cmd_demo1d(c, demo); }; });

  ScalingOptions scaling;
  auto* sc = app.add_subcommand("scaling", "Energy-scaling exponents for a given gamma");
  sc->add_option("--gamma", scaling.gamma, "Scaling exponent, e.g. 2 or 2.91")->required();
  sc->add_option("--L", scaling.L, "Box sizes for the bound table")->capture_default_str();
  sc->callback([&] { run = [&](Context& c) { return cmd_scaling(c, scaling); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what(), kUsage);
    return kUsage;
  }

  if (out_dir.empty()) {
    const char* env = std::getenv("SSBLOW_OUT_DIR");
    out_dir = env && *env ? env : "ssblow-out";
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::optional<Context> ctx;
  try {
    ctx.emplace(out_dir, out, svg);
    code = run(*ctx);
  } catch (const Error& e) {
    code = exit_code_for(e);
    error_json(err, e.kind(), e.what(), code);
  } catch (const std::invalid_argument& e) {
    code = kUsage;
    error_json(err, "usage", e.what(), code);
  } catch (const std::exception& e) {
    code = kNumeric;
    error_json(err, "internal", e.what(), code);
  }
  if (ctx) {
    auto& m = ctx->manifest();
    m.command = app.get_subcommands().front()->get_name();
    m.argv = args;
    m.version = SSBLOW_VERSION;
    m.exit_code = code;
    m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
      write_manifest(ctx->dir(), m);
    } catch (const std::exception& e) {
      error_json(err, "io", e.what(), kNumeric);
      return kNumeric;
    }
  }
  return code;
}

}  // namespace ssblow::cli
