#pragma once

// Run manifest: enough metadata to reproduce any CLI invocation exactly.
// Written as JSON next to the output file (<out>.manifest.json) or to stderr
// when the run prints to stdout.

#include <map>
#include <string>
#include <vector>

namespace t2r {

inline constexpr char kToolVersion[] = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct RunManifest {
  std::string command;                          // subcommand name
  std::map<std::string, std::string> parameters;  // resolved flag values
  std::string tool_version = kToolVersion;
  int schema_version = kSchemaVersion;
  std::string rng_algorithm;  // set for runs that consume randomness
  std::string timestamp_utc;  // ISO 8601, filled by now_utc() at emit time
  std::vector<std::string> outputs;
};

std::string now_utc();

std::string manifest_to_json(const RunManifest& m);

// Writes <out_path>.manifest.json; out_path empty -> returns false (caller
// should print to stderr instead).
bool write_manifest(const RunManifest& m, const std::string& out_path);

}  // namespace t2r
