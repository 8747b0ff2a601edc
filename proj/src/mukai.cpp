#include "tnq/mukai.hpp"

#include <numeric>
#include <random>

#include "tnq/error.hpp"
#include "tnq/forms.hpp"
#include "tnq/strata.hpp"

namespace tnq {
namespace mukai {

void NSLattice::validate() const {
  if (rank < 0) throw Error("schema", "lattice rank must be non-negative");
  if (static_cast<int>(gram.size()) != rank) throw Error("schema", "gram size must match rank");
  for (const auto& row : gram)
    if (static_cast<int>(row.size()) != rank) throw Error("schema", "gram must be square");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
          gram[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw Error("schema", "gram must be symmetric");
}

Int mukai_pairing(const MukaiVector& v1, const MukaiVector& v2, const NSLattice& lat) {
  lat.validate();
  if (static_cast<int>(v1.c.size()) != lat.rank || static_cast<int>(v2.c.size()) != lat.rank)
    throw Error("rank-mismatch", "vector c-components must match the lattice rank");
  Int s = 0;
  for (int i = 0; i < lat.rank; ++i)
    for (int j = 0; j < lat.rank; ++j)
      s += v1.c[static_cast<size_t>(i)] * lat.gram[static_cast<size_t>(i)][static_cast<size_t>(j)] *
           v2.c[static_cast<size_t>(j)];
  return s - v1.r * v2.a - v2.r * v1.a;
}

bool is_primitive(const MukaiVector& v) {
  Int g = std::abs(v.r);
  for (Int x : v.c) g = std::gcd(g, std::abs(x));
  g = std::gcd(g, std::abs(v.a));
  return g == 1;
}

bool is_positive(const MukaiVector& v, const NSLattice& lat, bool c_effective) {
  if (mukai_pairing(v, v, lat) < -2) return false;
  bool c_zero = std::all_of(v.c.begin(), v.c.end(), [](Int x) { return x == 0; });
  if (v.r > 0) return true;
  if (v.r != 0) return false;
  if (!c_zero) return c_effective && v.a != 0;
  return v.a > 0;
}

ExtQuiverResult ext_quiver_from_mukai(const std::vector<MukaiVector>& vs, const NSLattice& lat) {
  if (vs.empty()) throw Error("schema", "need at least one vector");
  int k = static_cast<int>(vs.size());
  ExtQuiverResult out;
  out.pairings.assign(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k), 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.pairings[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          mukai_pairing(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)], lat);

  for (int i = 0; i < k; ++i) {
    Int self = out.pairings[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if ((2 + self) % 2 != 0)
      throw Error("odd-loop-count", "self-extension dimension 2 + v.v must be even");
    if (2 + self < 0) throw Error("negative-arrow-count", "2 + v.v must be non-negative");
    for (int j = 0; j < k; ++j)
      if (i != j && out.pairings[static_cast<size_t>(i)][static_cast<size_t>(j)] < 0)
        throw Error("negative-arrow-count", "pairwise Mukai pairings must be non-negative");
  }

  Quiver dbl, und;
  for (int i = 1; i <= k; ++i) {
    dbl.vertex_ids.push_back(std::to_string(i));
    und.vertex_ids.push_back(std::to_string(i));
  }
  for (int i = 0; i < k; ++i) {
    Int self = out.pairings[static_cast<size_t>(i)][static_cast<size_t>(i)];
    for (Int l = 0; l < 2 + self; ++l) dbl.arrows.emplace_back(i, i);
    for (Int l = 0; l < (2 + self) / 2; ++l) und.arrows.emplace_back(i, i);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (Int l = 0; l < out.pairings[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++l)
        dbl.arrows.emplace_back(i, j);
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (Int l = 0; l < out.pairings[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++l)
        und.arrows.emplace_back(i, j);

  out.totally_negative = true;
  for (int i = 0; i < k && out.totally_negative; ++i)
    for (int j = 0; j < k; ++j)
      if (out.pairings[static_cast<size_t>(i)][static_cast<size_t>(j)] <= 0)
        out.totally_negative = false;
  out.doubled = std::move(dbl);
  out.underlying = std::move(und);
  return out;
}

bool cross_check_gloop(Int g, const std::vector<Int>& m, const std::vector<Int>& e) {
  if (g < 2) throw Error("precondition", "needs g >= 2");
  if (m.empty() || e.size() != m.size())
    throw Error("schema", "multiplicity lists must be nonempty and equal length");
  NSLattice lat{1, {{2 * g - 2}}};
  std::vector<MukaiVector> vs;
  for (Int mi : m) vs.push_back(MukaiVector{0, {mi}, 0});
  ExtQuiverResult ext = ext_quiver_from_mukai(vs, lat);

  Quiver sg = loop_quiver(static_cast<int>(g));
  SemisimpleType tau;
  for (size_t i = 0; i < m.size(); ++i) tau.summands.push_back({dims({m[i]}), e[i]});
  // keep the caller's class order; sorting would scramble the comparison
  auto [aux, aux_dims] = aux_quiver(sg, tau);
  (void)aux_dims;

  int k = static_cast<int>(m.size());
  if (ext.underlying.vcount() != k || aux.vcount() != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (ext.underlying.arrows_from_to(i, j) != aux.arrows_from_to(i, j)) return false;
  return true;
}

bool sym_form_identity_check(const std::vector<MukaiVector>& vs, const NSLattice& lat, int trials,
                             std::uint64_t seed) {
  ExtQuiverResult ext = ext_quiver_from_mukai(vs, lat);
  int k = static_cast<int>(vs.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> dist(0, 6);
  for (int t = 0; t < trials; ++t) {
    DimVector d = DimVector::zeros(k), e = DimVector::zeros(k);
    for (int i = 0; i < k; ++i) {
      d.v[static_cast<size_t>(i)] = dist(rng);
      e.v[static_cast<size_t>(i)] = dist(rng);
    }
    Int lhs = sym_form(ext.underlying, d, e);
    // -(sum d_i v_i).(sum e_i v_i) expands over the pairing matrix
    Int rhs = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        rhs -= d.v[static_cast<size_t>(i)] *
               ext.pairings[static_cast<size_t>(i)][static_cast<size_t>(j)] *
               e.v[static_cast<size_t>(j)];
    if (lhs != rhs) return false;
  }
  return true;
}

bool total_negativity_euler_check(const CategoryDescriptor& desc) {
  switch (desc.kind) {
    case CategoryDescriptor::Kind::PreprojectiveQuiver:
    case CategoryDescriptor::Kind::MultiplicativeQuiver:
      return is_totally_negative(desc.quiver).totally_negative;
    case CategoryDescriptor::Kind::MukaiVectors:
      return ext_quiver_from_mukai(desc.vectors, desc.lattice).totally_negative;
  }
  throw Error("unsupported", "unknown category descriptor");
}

}  // namespace mukai
}  // namespace tnq
