#include "tnq/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "tnq/error.hpp"
#include "tnq/util.hpp"

namespace tnq {

void Quiver::validate() const {
  if (vertex_ids.empty()) throw Error("schema", "quiver needs at least one vertex");
  std::set<std::string> seen;
  for (const auto& id : vertex_ids) {
    if (id.empty()) throw Error("schema", "empty vertex id");
    if (!seen.insert(id).second) throw Error("schema", "duplicate vertex id: " + id);
  }
  for (const auto& [s, t] : arrows) {
    if (s < 0 || s >= vcount() || t < 0 || t >= vcount())
      throw Error("schema", "arrow endpoint out of range");
  }
}

int Quiver::loops(int i) const {
  int c = 0;
  for (const auto& [s, t] : arrows)
    if (s == i && t == i) ++c;
  return c;
}

int Quiver::arrows_from_to(int i, int j) const {
  int c = 0;
  for (const auto& [s, t] : arrows)
    if (s == i && t == j) ++c;
  return c;
}

int Quiver::arrows_between(int i, int j) const {
  return arrows_from_to(i, j) + arrows_from_to(j, i);
}

std::optional<int> Quiver::vertex_index(const std::string& id) const {
  for (int i = 0; i < vcount(); ++i)
    if (vertex_ids[static_cast<size_t>(i)] == id) return i;
  return std::nullopt;
}

Quiver Quiver::restricted(const std::vector<int>& keep) const {
  std::vector<int> old_to_new(static_cast<size_t>(vcount()), -1);
  Quiver out;
  for (int k : keep) {
    if (k < 0 || k >= vcount()) throw Error("schema", "restriction index out of range");
    old_to_new[static_cast<size_t>(k)] = static_cast<int>(out.vertex_ids.size());
    out.vertex_ids.push_back(vertex_ids[static_cast<size_t>(k)]);
  }
  for (const auto& [s, t] : arrows) {
    int ns = old_to_new[static_cast<size_t>(s)];
    int nt = old_to_new[static_cast<size_t>(t)];
    if (ns >= 0 && nt >= 0) out.arrows.emplace_back(ns, nt);
  }
  out.validate();
  return out;
}

Quiver Quiver::doubled() const {
  Quiver out = *this;
  for (const auto& [s, t] : arrows) out.arrows.emplace_back(t, s);
  return out;
}

std::string Quiver::canonical_hash() const {
  std::vector<std::string> vs = vertex_ids;
  std::sort(vs.begin(), vs.end());
  std::vector<std::string> as;
  as.reserve(arrows.size());
  for (const auto& [s, t] : arrows)
    as.push_back(vertex_ids[static_cast<size_t>(s)] + ">" + vertex_ids[static_cast<size_t>(t)]);
  std::sort(as.begin(), as.end());
  std::string repr;
  for (const auto& v : vs) repr += v + ",";
  repr += "|";
  for (const auto& a : as) repr += a + ";";
  return fnv1a64_hex(repr);
}

Quiver Quiver::make(std::vector<std::string> ids,
                    const std::vector<std::pair<std::string, std::string>>& arrow_ids) {
  Quiver q;
  q.vertex_ids = std::move(ids);
  for (const auto& [s, t] : arrow_ids) {
    Quiver tmp;
    tmp.vertex_ids = q.vertex_ids;
    auto si = tmp.vertex_index(s);
    auto ti = tmp.vertex_index(t);
    if (!si || !ti) throw Error("schema", "arrow references unknown vertex: " + s + ">" + t);
    q.arrows.emplace_back(*si, *ti);
  }
  q.validate();
  return q;
}

Quiver Quiver::from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw Error("schema", "quiver json needs \"vertices\" and \"arrows\"");
  if (!j["vertices"].is_array()) throw Error("schema", "\"vertices\" must be an array");
  if (!j["arrows"].is_array()) throw Error("schema", "\"arrows\" must be an array");
  std::vector<std::string> ids;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw Error("schema", "vertex ids must be strings");
    ids.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> as;
  for (const auto& a : j["arrows"]) {
    if (!a.is_object() || !a.contains("src") || !a.contains("tgt"))
      throw Error("schema", "arrow entries need \"src\" and \"tgt\"");
    as.emplace_back(a["src"].get<std::string>(), a["tgt"].get<std::string>());
  }
  return make(std::move(ids), as);
}

Quiver Quiver::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("schema", std::string("invalid json in ") + path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::ordered_json Quiver::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = vertex_ids;
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& [s, t] : arrows) {
    nlohmann::ordered_json a;
    a["src"] = vertex_ids[static_cast<size_t>(s)];
    a["tgt"] = vertex_ids[static_cast<size_t>(t)];
    j["arrows"].push_back(a);
  }
  return j;
}

bool DimVector::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

Int DimVector::total() const { return std::accumulate(v.begin(), v.end(), Int{0}); }

Int DimVector::dot(const DimVector& other) const {
  if (v.size() != other.v.size()) throw Error("vertex-mismatch", "dimension vectors differ in length");
  Int s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * other.v[i];
  return s;
}

std::vector<int> DimVector::support() const {
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

DimVector DimVector::restricted(const std::vector<int>& keep) const {
  DimVector out;
  for (int k : keep) out.v.push_back(v.at(static_cast<size_t>(k)));
  return out;
}

DimVector DimVector::unit(int n, int i) {
  DimVector d = zeros(n);
  d.v.at(static_cast<size_t>(i)) = 1;
  return d;
}

DimVector DimVector::from_json(const Quiver& q, const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw Error("schema", "dimension vector json must be an object");
  DimVector d = zeros(q.vcount());
  std::vector<bool> set(static_cast<size_t>(q.vcount()), false);
  for (const auto& [key, val] : j.items()) {
    auto idx = q.vertex_index(key);
    if (!idx) throw Error("schema", "dimension entry for unknown vertex: " + key);
    if (!val.is_number_integer()) throw Error("schema", "dimension entries must be integers");
    Int x = val.get<Int>();
    if (x < 0) throw Error("schema", "dimension entries must be non-negative");
    d.v[static_cast<size_t>(*idx)] = x;
    set[static_cast<size_t>(*idx)] = true;
  }
  for (size_t i = 0; i < set.size(); ++i)
    if (!set[i]) throw Error("schema", "missing dimension entry for vertex " + q.vertex_ids[i]);
  return d;
}

DimVector DimVector::parse(const Quiver& q, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  auto to_int = [](const std::string& s) -> Int {
    try {
      size_t pos = 0;
      Int x = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return x;
    } catch (const std::exception&) {
      throw Error("schema", "bad dimension entry: " + s);
    }
  };
  bool named = text.find('=') != std::string::npos;
  if (named) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& p : parts) {
      auto eq = p.find('=');
      if (eq == std::string::npos) throw Error("schema", "expected v=k in: " + p);
      j[p.substr(0, eq)] = to_int(p.substr(eq + 1));
    }
    return from_json(q, j);
  }
  if (static_cast<int>(parts.size()) != q.vcount())
    throw Error("schema", "positional dims need exactly one entry per vertex");
  DimVector d = zeros(q.vcount());
  for (size_t i = 0; i < parts.size(); ++i) {
    Int x = to_int(parts[i]);
    if (x < 0) throw Error("schema", "dimension entries must be non-negative");
    d.v[i] = x;
  }
  return d;
}

nlohmann::ordered_json DimVector::to_json(const Quiver& q) const {
  if (static_cast<int>(v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (size_t i = 0; i < v.size(); ++i) j[q.vertex_ids[i]] = v[i];
  return j;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Quiver loop_quiver(int g) {
  Quiver q;
  q.vertex_ids = {"v1"};
  for (int i = 0; i < g; ++i) q.arrows.emplace_back(0, 0);
  return q;
}

Quiver path_quiver(int nvertices) {
  Quiver q;
  for (int i = 1; i <= nvertices; ++i) q.vertex_ids.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < nvertices; ++i) q.arrows.emplace_back(i, i + 1);
  return q;
}

Quiver cycle_quiver(int nvertices) {
  Quiver q = path_quiver(nvertices);
  if (nvertices > 1) q.arrows.emplace_back(nvertices - 1, 0);
  return q;
}

Quiver kronecker_quiver(int nparallel) {
  Quiver q;
  q.vertex_ids = {"v1", "v2"};
  for (int i = 0; i < nparallel; ++i) q.arrows.emplace_back(0, 1);
  return q;
}

Quiver quiver_from_counts(const std::vector<int>& loops,
                          const std::vector<std::vector<int>>& between) {
  Quiver q;
  int n = static_cast<int>(loops.size());
  for (int i = 1; i <= n; ++i) q.vertex_ids.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < loops[static_cast<size_t>(i)]; ++k) q.arrows.emplace_back(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int c = between.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
      for (int k = 0; k < c; ++k) q.arrows.emplace_back(i, j);
    }
  return q;
}

DimVector dims(std::vector<Int> entries) { return DimVector{std::move(entries)}; }

}  // namespace tnq
