#pragma once

#include <cstddef>
#include <vector>

#include "tnq/quiver.hpp"
#include "tnq/simples.hpp"

namespace tnq {

struct Summand {
  DimVector dim;
  Int mult = 1;
  bool operator==(const Summand&) const = default;
};

/// Multiset of (simple dimension, multiplicity) pairs. Two entries may carry
/// the same dimension vector: they stand for non-isomorphic simples of equal
/// dimension and are distinct from one entry of doubled multiplicity.
struct SemisimpleType {
  std::vector<Summand> summands;  // kept canonically sorted

  void canonicalize();
  DimVector ambient(int nvertices) const;
  int classes() const { return static_cast<int>(summands.size()); }

  bool operator==(const SemisimpleType&) const = default;

  nlohmann::ordered_json to_json(const Quiver& q) const;
  static SemisimpleType from_json(const Quiver& q, const nlohmann::ordered_json& j);
};

enum class OraclePolicy { Strict, Permissive };

/// Type of the zero module: vertex simples with multiplicity d_i.
SemisimpleType tau_min(const Quiver& q, const DimVector& d);

inline constexpr std::size_t kDefaultTypeCap = 100000;

/// All semisimple types refining d whose summand dimensions the simple-module
/// oracle admits (Strict: yes only; Permissive: yes or unknown). Canonically
/// ordered and deterministic. Throws cap-exceeded beyond `cap` results.
std::vector<SemisimpleType> enumerate_semisimple_types(const Quiver& q, const DimVector& d,
                                                       OraclePolicy policy,
                                                       std::size_t cap = kDefaultTypeCap);

/// Underlying auxiliary quiver at tau: vertex i gets 1 - <d_i,d_i> loops,
/// vertices i < j get -(d_i,d_j) arrows oriented i -> j; dimension vector is
/// the multiplicities. The double of the result carries 2(1 - <d_i,d_i>) loops
/// and -(d_i,d_j) arrows each way.
std::pair<Quiver, DimVector> aux_quiver(const Quiver& q, const SemisimpleType& tau);

/// Stratification order: tau_prime <= tau iff a non-negative integer matrix c
/// satisfies d_i = sum_j c_ij d'_j and e'_j = sum_i c_ij e_i, i.e. every
/// simple of tau decomposes into simples of tau_prime with matching
/// multiplicities. Decided by exact backtracking.
bool types_leq(const SemisimpleType& tau_prime, const SemisimpleType& tau);

struct TopStep {
  int cls = 0;  // 1-based class index into the type's summands
  Int mult = 1;
  bool operator==(const TopStep&) const = default;
};
using TopType = std::vector<TopStep>;

nlohmann::ordered_json top_type_to_json(const TopType& t);

/// All ordered sequences (j_s, m_s) with per-class multiplicity sums equal to
/// the type's multiplicities. Adjacent equal classes are admitted.
std::vector<TopType> enumerate_top_types(const SemisimpleType& tau,
                                         std::size_t cap = kDefaultTypeCap);

/// z_s = 0 when <dim N_{j_s}, dim N_{j_s}> = 1 or when class j_s has not
/// occurred before; otherwise the multiplicity of its latest occurrence.
std::vector<Int> z_sequence(const TopType& top, const std::vector<DimVector>& class_dims,
                            const Quiver& q);

}  // namespace tnq
