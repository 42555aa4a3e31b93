#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "manifest.hpp"
#include "ssblow/errors.hpp"

namespace ssblow::cli {

class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "usage"; }
};

/// Where a command writes, and what it has written so far.
class Context {
 public:
  Context(std::filesystem::path out_dir, std::ostream& out, bool svg);

  std::ostream& out() { return out_; }
  const std::filesystem::path& dir() const { return dir_; }
  RunManifest& manifest() { return manifest_; }

  void write_text(const std::string& name, const std::string& body, const std::string& schema);
  /// Schema taken from the document's "schema" member.
  void write_json(const std::string& name, const nlohmann::json& doc);
  /// Rows of numbers under a header; with --svg also name.svg plotting
  /// every column against the first.
  void write_csv(const std::string& name, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows, const std::string& title, bool log_y = false);
  void record(const std::filesystem::path& file, const std::string& schema);

 private:
  std::filesystem::path dir_;
  std::ostream& out_;
  bool svg_;
  RunManifest manifest_;
};

struct DeriveOptions {
  std::string mode = "single";
  unsigned depth = 1;
  std::string format = "json";
};

struct VerifyOptions {
  std::string gamma;
  unsigned kmax = 3;
  unsigned p = 2;
  bool no_decay = false;
};

struct IdentityOptions {
  std::string preset = "rays";
  unsigned p = 2;
  double rho = 10.0;
  double epsilon = 0.0;
  std::size_t nR = 401;
  std::size_t nZ = 801;
  bool no_enforce = false;
};

struct SimulateOptions {
  std::optional<std::string> config;
  std::optional<double> t_end;
};

struct FitOptions {
  std::optional<std::string> series;
  bool synthetic = false;
  double T = 1.0;
  double gamma = 0.4;
  double noise = 0.0;
  unsigned seed = 1;
  std::size_t samples = 20;
  std::optional<double> reference_gamma;
};

struct Demo1dCliOptions {
  std::string bc = "periodic";
  std::size_t n = 200;
  double t_end = 1.0;
  double amplitude = 3.0;
  double threshold = 1e3;
};

struct ScalingOptions {
  std::string gamma;
  std::vector<double> L{1.0, 10.0, 100.0, 1000.0, 10000.0};
};

int cmd_derive(Context& ctx, const DeriveOptions& o);
int cmd_verify(Context& ctx, const VerifyOptions& o);
int cmd_identity(Context& ctx, const IdentityOptions& o);
int cmd_simulate(Context& ctx, const SimulateOptions& o);
int cmd_fit(Context& ctx, const FitOptions& o);
int cmd_demo1d(Context& ctx, const Demo1dCliOptions& o);
int cmd_scaling(Context& ctx, const ScalingOptions& o);

}  // namespace ssblow::cli
