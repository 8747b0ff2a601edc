#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tnq {
namespace cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Common report header: tool, version, command, parameter echo. Timing goes
/// under a separate "timing" key so byte-level determinism holds modulo it.
json report_envelope(const std::string& command, const json& params);

json rational_json(const mpq_class& r);  // {"num": "...", "den": "..."}

std::string file_fnv_hash(const std::string& path);

/// Reproducibility record for a run: inputs, parameters, outputs with hashes.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, hash)
  json parameters;
  std::vector<std::pair<std::string, std::string>> outputs;  // (path, hash)
  double wall_seconds = 0.0;

  json to_json() const;
};

}  // namespace cli
}  // namespace tnq
