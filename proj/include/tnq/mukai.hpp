#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tnq/quiver.hpp"

namespace tnq {
namespace mukai {

/// Neron-Severi lattice modeled abstractly: a free module with a symmetric
/// Gram matrix. Effectivity of classes is not lattice data and stays a
/// caller-supplied flag.
struct NSLattice {
  int rank = 0;
  std::vector<std::vector<Int>> gram;

  void validate() const;
};

struct MukaiVector {
  Int r = 0;
  std::vector<Int> c;
  Int a = 0;
};

/// c1.c2 - r1 a2 - r2 a1.
Int mukai_pairing(const MukaiVector& v1, const MukaiVector& v2, const NSLattice& lat);

/// gcd of all coordinates is one.
bool is_primitive(const MukaiVector& v);

/// v.v >= -2 and one of: r > 0; r = 0, c != 0 effective (flag), a != 0;
/// r = 0, c = 0, a > 0.
bool is_positive(const MukaiVector& v, const NSLattice& lat, bool c_effective);

struct ExtQuiverResult {
  Quiver doubled;     // 2 + v_i.v_i loops at i, v_i.v_j arrows each way
  Quiver underlying;  // half the loops, one direction between i < j
  std::vector<std::vector<Int>> pairings;
  bool totally_negative = false;  // all pairings (self included) > 0
};

/// Ext-quiver of a polystable object with stable summand vectors. Throws
/// odd-loop-count when 2 + v_i.v_i is odd (the degree-two pairing forces even
/// self-extensions) and negative-arrow-count when some v_i.v_j < 0.
ExtQuiverResult ext_quiver_from_mukai(const std::vector<MukaiVector>& vs, const NSLattice& lat);

/// The Ext-quiver of vectors m_i v0 with v0.v0 = 2g-2 equals the auxiliary
/// quiver of the g-loop quiver at type (m_i, e_i): loops 1 + m_i^2 (g-1),
/// between-counts 2 m_i m_j (g-1). Compared as exact arrow-count matrices.
bool cross_check_gloop(Int g, const std::vector<Int>& m, const std::vector<Int>& e);

/// (d,e) on the underlying Ext-quiver equals -(sum d_i v_i).(sum e_i v_i),
/// verified on `trials` random non-negative vectors (deterministic seed).
bool sym_form_identity_check(const std::vector<MukaiVector>& vs, const NSLattice& lat, int trials,
                             std::uint64_t seed = 0x746e71u);

struct CategoryDescriptor {
  enum class Kind { PreprojectiveQuiver, MultiplicativeQuiver, MukaiVectors };
  Kind kind = Kind::PreprojectiveQuiver;
  Quiver quiver;                  // quiver-backed kinds
  std::vector<MukaiVector> vectors;  // MukaiVectors kind
  NSLattice lattice;
};

/// Total negativity of the module category behind the descriptor, via the
/// computable shadow of the alternating Ext sum: unit-vector values of the
/// symmetrized form for quiver-backed inputs, pairing signs for Mukai input.
bool total_negativity_euler_check(const CategoryDescriptor& desc);

}  // namespace mukai
}  // namespace tnq
