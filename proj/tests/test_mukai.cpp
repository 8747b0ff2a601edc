#include <doctest.h>

#include <random>

#include "tnq/error.hpp"
#include "tnq/forms.hpp"
#include "tnq/mukai.hpp"

using namespace tnq;
using namespace tnq::mukai;

namespace {

NSLattice rank1(Int self) { return NSLattice{1, {{self}}}; }

}  // namespace

TEST_CASE("pairing on frozen examples") {
  NSLattice elliptic = rank1(0);
  MukaiVector fiber{0, {1}, 1};
  CHECK(mukai_pairing(fiber, fiber, elliptic) == 0);

  NSLattice trivial = rank1(2);
  MukaiVector v{1, {0}, 1};
  CHECK(mukai_pairing(v, v, trivial) == -2);

  std::mt19937 rng(3);
  std::uniform_int_distribution<Int> dist(-4, 4);
  for (int t = 0; t < 50; ++t) {
    MukaiVector a{dist(rng), {dist(rng)}, dist(rng)};
    MukaiVector b{dist(rng), {dist(rng)}, dist(rng)};
    CHECK(mukai_pairing(a, b, trivial) == mukai_pairing(b, a, trivial));
  }
  CHECK_THROWS_AS(mukai_pairing(MukaiVector{0, {1, 2}, 0}, fiber, elliptic), Error);
}

TEST_CASE("primitivity") {
  CHECK_FALSE(is_primitive(MukaiVector{0, {0}, 3}));
  CHECK(is_primitive(MukaiVector{0, {0}, 1}));
  CHECK(is_primitive(MukaiVector{1, {5}, 1}));
  CHECK_FALSE(is_primitive(MukaiVector{0, {0}, 0}));
  CHECK_FALSE(is_primitive(MukaiVector{2, {4}, 6}));
}

TEST_CASE("positivity clauses") {
  NSLattice lat = rank1(0);
  CHECK(is_positive(MukaiVector{0, {0}, 1}, lat, false));
  CHECK_FALSE(is_positive(MukaiVector{0, {0}, -1}, lat, false));
  CHECK(is_positive(MukaiVector{2, {1}, 0}, lat, false));           // r > 0
  CHECK(is_positive(MukaiVector{0, {1}, 1}, lat, true));            // effective curve class
  CHECK_FALSE(is_positive(MukaiVector{0, {1}, 1}, lat, false));     // effectivity withheld
  CHECK_FALSE(is_positive(MukaiVector{0, {1}, 0}, lat, true));      // a = 0
  CHECK_FALSE(is_positive(MukaiVector{1, {0}, 2}, rank1(2), false));  // v.v = -4 < -2
}

TEST_CASE("ext quiver of a single isotropic vector is the one-loop vertex") {
  auto ext = ext_quiver_from_mukai({MukaiVector{0, {1}, 1}}, rank1(0));
  CHECK(ext.underlying.vcount() == 1);
  CHECK(ext.underlying.loops(0) == 1);
  CHECK(ext.doubled.loops(0) == 2);
  CHECK_FALSE(ext.totally_negative);  // self pairing 0, criterion strict
}

TEST_CASE("ext quiver of two multiples on a genus-two class") {
  NSLattice lat = rank1(2);  // v0.v0 = 2, so g = 2
  std::vector<MukaiVector> vs = {MukaiVector{0, {1}, 0}, MukaiVector{0, {2}, 0}};
  auto ext = ext_quiver_from_mukai(vs, lat);
  CHECK(ext.underlying.loops(0) == 2);
  CHECK(ext.underlying.loops(1) == 5);
  CHECK(ext.underlying.arrows_between(0, 1) == 4);
  CHECK(ext.doubled.loops(0) == 4);
  CHECK(ext.doubled.loops(1) == 10);
  CHECK(ext.doubled.arrows_from_to(0, 1) == 4);
  CHECK(ext.doubled.arrows_from_to(1, 0) == 4);
  CHECK(ext.totally_negative);
  CHECK(is_totally_negative(ext.underlying).totally_negative);
}

TEST_CASE("ext quiver rejections") {
  // odd self pairing violates the evenness forced by the degree-two pairing
  CHECK_THROWS_AS(ext_quiver_from_mukai({MukaiVector{0, {1}, 0}}, rank1(1)), Error);
  // negative cross pairing cannot be an arrow count
  std::vector<MukaiVector> vs = {MukaiVector{1, {0}, 1}, MukaiVector{1, {0}, 1}};
  CHECK_THROWS_AS(ext_quiver_from_mukai(vs, rank1(0)), Error);
}

TEST_CASE("verdict coincides with the structural test") {
  for (Int self : {0, 2, 4})
    for (Int m1 = 1; m1 <= 2; ++m1)
      for (Int m2 = 1; m2 <= 2; ++m2) {
        std::vector<MukaiVector> vs = {MukaiVector{0, {m1}, 0}, MukaiVector{0, {m2}, 0}};
        auto ext = ext_quiver_from_mukai(vs, rank1(self));
        CHECK(ext.totally_negative == is_totally_negative(ext.underlying).totally_negative);
      }
  // orthogonal isotropic classes give a disconnected quiver, never negative
  NSLattice two{2, {{0, 0}, {0, 0}}};
  std::vector<MukaiVector> vs = {MukaiVector{0, {1, 0}, 1}, MukaiVector{0, {0, 1}, 1}};
  auto ext = ext_quiver_from_mukai(vs, two);
  CHECK_FALSE(ext.totally_negative);
  CHECK(ext.totally_negative == is_totally_negative(ext.underlying).totally_negative);
}

TEST_CASE("g-loop cross-check on frozen examples") {
  CHECK(cross_check_gloop(2, {1, 1}, {1, 1}));
  CHECK(cross_check_gloop(2, {1, 2}, {1, 1}));
  CHECK(cross_check_gloop(3, {1, 1, 2}, {2, 1, 3}));
  CHECK_THROWS_AS(cross_check_gloop(1, {1}, {1}), Error);
}

TEST_CASE("pairing identity for the symmetrized form") {
  NSLattice lat = rank1(2);
  std::vector<MukaiVector> family = {MukaiVector{0, {1}, 0}, MukaiVector{0, {2}, 0},
                                     MukaiVector{0, {3}, 0}};
  CHECK(sym_form_identity_check(family, lat, 100));
  NSLattice elliptic = rank1(0);
  std::vector<MukaiVector> mixed = {MukaiVector{0, {1}, 1}, MukaiVector{0, {1}, 2}};
  CHECK(sym_form_identity_check(mixed, elliptic, 100));
}

TEST_CASE("category-level total negativity") {
  CategoryDescriptor pi;
  pi.kind = CategoryDescriptor::Kind::PreprojectiveQuiver;
  pi.quiver = loop_quiver(2);
  CHECK(total_negativity_euler_check(pi));
  pi.quiver = loop_quiver(1);
  CHECK_FALSE(total_negativity_euler_check(pi));

  CategoryDescriptor mult;
  mult.kind = CategoryDescriptor::Kind::MultiplicativeQuiver;
  mult.quiver = quiver_from_counts({2, 2}, {{0, 1}, {0, 0}});
  CHECK(total_negativity_euler_check(mult));

  CategoryDescriptor k3;
  k3.kind = CategoryDescriptor::Kind::MukaiVectors;
  k3.lattice = rank1(2);
  k3.vectors = {MukaiVector{0, {1}, 0}, MukaiVector{0, {2}, 0}};
  CHECK(total_negativity_euler_check(k3));
}
