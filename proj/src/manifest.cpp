#include "t2r/manifest.hpp"

#include <ctime>
#include <fstream>

#include <json.hpp>

namespace t2r {

std::string now_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["tool_version"] = m.tool_version;
  j["schema_version"] = m.schema_version;
  if (!m.rng_algorithm.empty()) j["rng_algorithm"] = m.rng_algorithm;
  j["timestamp_utc"] = m.timestamp_utc;
  j["outputs"] = m.outputs;
  return j.dump(2);
}

bool write_manifest(const RunManifest& m, const std::string& out_path) {
  if (out_path.empty()) return false;
  std::ofstream os(out_path + ".manifest.json");
  if (!os) return false;
  os << manifest_to_json(m) << '\n';
  return true;
}

}  // namespace t2r
