#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tnq {

using Int = long long;

/// Directed multigraph with loops and parallel arrows. Vertices keep the
/// order of declaration; arrows keep file order and store vertex indices.
struct Quiver {
  std::vector<std::string> vertex_ids;
  std::vector<std::pair<int, int>> arrows;  // (source, target) indices

  int vcount() const { return static_cast<int>(vertex_ids.size()); }
  int acount() const { return static_cast<int>(arrows.size()); }

  int loops(int i) const;
  int arrows_from_to(int i, int j) const;  // directed count i -> j
  int arrows_between(int i, int j) const;  // unordered count, i != j

  std::optional<int> vertex_index(const std::string& id) const;

  /// Full subquiver on `keep` (indices into this quiver, any order kept as given).
  Quiver restricted(const std::vector<int>& keep) const;

  /// One reversed arrow adjoined per arrow.
  Quiver doubled() const;

  /// Hash of sorted vertex ids + sorted arrow multiset; orientation preserved,
  /// declaration order ignored. Stable across runs.
  std::string canonical_hash() const;

  static Quiver make(std::vector<std::string> ids,
                     const std::vector<std::pair<std::string, std::string>>& arrow_ids);
  static Quiver from_json(const nlohmann::ordered_json& j);
  static Quiver from_file(const std::string& path);
  nlohmann::ordered_json to_json() const;

 private:
  void validate() const;
};

/// Non-negative integer vector indexed by a quiver's vertex order.
struct DimVector {
  std::vector<Int> v;

  bool is_zero() const;
  Int total() const;
  Int dot(const DimVector& other) const;  // sum of entrywise products
  std::vector<int> support() const;
  DimVector restricted(const std::vector<int>& keep) const;

  bool operator==(const DimVector&) const = default;

  static DimVector zeros(int n) { return DimVector{std::vector<Int>(static_cast<size_t>(n), 0)}; }
  static DimVector unit(int n, int i);
  static DimVector from_json(const Quiver& q, const nlohmann::ordered_json& j);
  /// "v1=2,v2=1" binds by name; "2,1" binds positionally to declaration order.
  static DimVector parse(const Quiver& q, const std::string& text);
  nlohmann::ordered_json to_json(const Quiver& q) const;
  std::string to_string() const;
};

// Builders used throughout tests and catalogs.
Quiver loop_quiver(int g);                 // one vertex, g loops
Quiver path_quiver(int nvertices);         // v1 -> v2 -> ... (no loops)
Quiver cycle_quiver(int nvertices);        // directed n-cycle
Quiver kronecker_quiver(int nparallel);    // two vertices, n parallel arrows
/// General builder: loops[i] loops at vertex i, between[i][j] arrows i -> j for i < j.
Quiver quiver_from_counts(const std::vector<int>& loops,
                          const std::vector<std::vector<int>>& between);

DimVector dims(std::vector<Int> entries);

}  // namespace tnq
