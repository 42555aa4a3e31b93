#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ssblow::cli {

inline constexpr const char* kManifestSchema = "manifest/1";

/// Schema tags: "hierarchy/1", "rigidity/1", "cylsim/1" for JSON reports,
/// "csv:<header line>", "latex", "text", "svg", "grid-binary".
struct OutputFile {
  std::string path;  // relative to the output directory
  std::string schema;
};

struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json config = nlohmann::json::object();
  std::string version;
  double wall_time_s = 0.0;
  int exit_code = 0;
  std::vector<OutputFile> outputs;
};

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

/// Writes manifest.json into `dir`.
void write_manifest(const std::filesystem::path& dir, const RunManifest& m);

/// Problems found when checking every listed output against its schema;
/// empty when the manifest is consistent.
std::vector<std::string> validate_manifest(const std::filesystem::path& dir);

}  // namespace ssblow::cli
