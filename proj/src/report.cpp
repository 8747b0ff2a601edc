#include "tnq/report.hpp"

#include <fstream>
#include <sstream>

#include "tnq/error.hpp"
#include "tnq/util.hpp"

namespace tnq {
namespace cli {

json report_envelope(const std::string& command, const json& params) {
  json j;
  j["tool"] = "tnq";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["params"] = params;
  return j;
}

json rational_json(const mpq_class& r) {
  json j;
  j["num"] = r.get_num().get_str();
  j["den"] = r.get_den().get_str();
  return j;
}

std::string file_fnv_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a64_hex(ss.str());
}

json RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = json::array();
  for (const auto& [path, hash] : inputs) {
    json e;
    e["path"] = path;
    e["hash"] = hash;
    j["inputs"].push_back(e);
  }
  j["parameters"] = parameters;
  j["tool_version"] = kToolVersion;
  j["outputs"] = json::array();
  for (const auto& [path, hash] : outputs) {
    json e;
    e["path"] = path;
    e["hash"] = hash;
    j["outputs"].push_back(e);
  }
  j["timing"] = {{"wall_seconds", wall_seconds}};
  return j;
}

}  // namespace cli
}  // namespace tnq
