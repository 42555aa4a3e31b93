#include "manifest.hpp"

#include <fstream>
#include <sstream>

#include "ssblow/errors.hpp"
#include "ssblow/grid_io.hpp"

namespace ssblow::cli {

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& o : m.outputs) outputs.push_back({{"path", o.path}, {"schema", o.schema}});
  return {{"schema", kManifestSchema},
          {"command", m.command},
          {"argv", m.argv},
          {"config", m.config},
          {"toolkit_version", m.version},
          {"wall_time_s", m.wall_time_s},
          {"exit_code", m.exit_code},
          {"outputs", outputs},
          {"schema_versions",
           {{"manifest", kManifestSchema}, {"hierarchy", "hierarchy/1"}, {"rigidity", "rigidity/1"}, {"cylsim", "cylsim/1"}}}};
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != kManifestSchema) throw ParseError("not a run manifest");
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.argv = j.at("argv").get<std::vector<std::string>>();
  m.config = j.at("config");
  m.version = j.at("toolkit_version").get<std::string>();
  m.wall_time_s = j.at("wall_time_s").get<double>();
  m.exit_code = j.at("exit_code").get<int>();
  for (const auto& o : j.at("outputs")) m.outputs.push_back({o.at("path"), o.at("schema")});
  return m;
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& m) {
  std::ofstream out(dir / "manifest.json");
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << to_json(m).dump(2) << '\n';
}

namespace {

std::string check(const std::filesystem::path& file, const std::string& schema) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return "missing";
  if (schema.rfind("csv:", 0) == 0) {
    std::string header;
    std::getline(in, header);
    return header == schema.substr(4) ? "" : "header '" + header + "'";
  }
  if (schema == "grid-binary") {
    try {
      read_grid_binary(in);
      return "";
    } catch (const std::exception& e) {
      return e.what();
    }
  }
  std::stringstream text;
  text << in.rdbuf();
  const std::string body = text.str();
  if (schema == "latex" || schema == "text") return body.empty() ? "empty" : "";
  if (schema == "svg") return body.find("<svg") != std::string::npos ? "" : "not an SVG document";
  try {
    const auto j = nlohmann::json::parse(body);
    const auto declared = j.value("schema", std::string{});
    return declared == schema ? "" : "schema '" + declared + "'";
  } catch (const nlohmann::json::exception& e) {
    return e.what();
  }
}

}  // namespace

std::vector<std::string> validate_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) return {"manifest.json is missing"};
  const RunManifest m = manifest_from_json(nlohmann::json::parse(in));
  std::vector<std::string> problems;
  for (const auto& o : m.outputs) {
    const auto why = check(dir / o.path, o.schema);
    if (!why.empty()) problems.push_back(o.path + " (" + o.schema + "): " + why);
  }
  return problems;
}

}  // namespace ssblow::cli
