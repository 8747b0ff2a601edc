#include <doctest.h>

#include <algorithm>

#include "tnq/error.hpp"
#include "tnq/forms.hpp"
#include "tnq/strata.hpp"

using namespace tnq;

namespace {

bool contains_summand_dim(const std::vector<SemisimpleType>& types, const std::vector<Int>& dim) {
  for (const auto& t : types)
    for (const auto& s : t.summands)
      if (s.dim.v == dim) return true;
  return false;
}

}  // namespace

TEST_CASE("tau_min is the type of the zero module") {
  SemisimpleType t = tau_min(loop_quiver(2), dims({3}));
  REQUIRE(t.summands.size() == 1);
  CHECK(t.summands[0].dim.v == std::vector<Int>{1});
  CHECK(t.summands[0].mult == 3);

  Quiver pair = quiver_from_counts({2, 2}, {{0, 1}, {0, 0}});
  SemisimpleType t2 = tau_min(pair, dims({2, 1}));
  REQUIRE(t2.summands.size() == 2);
  CHECK(t2.ambient(2).v == std::vector<Int>{2, 1});

  // independent of the arrow structure
  Quiver other = quiver_from_counts({0, 3}, {{0, 2}, {0, 0}});
  CHECK(tau_min(other, dims({2, 1})) == t2);
}

TEST_CASE("semisimple type enumeration on the two-loop vertex") {
  Quiver s2 = loop_quiver(2);
  auto one = enumerate_semisimple_types(s2, dims({1}), OraclePolicy::Strict);
  CHECK(one.size() == 1);
  auto types = enumerate_semisimple_types(s2, dims({2}), OraclePolicy::Strict);
  REQUIRE(types.size() == 3);
  // {(2),1}, {(1),2}, {(1),1}+{(1),1}
  SemisimpleType whole;
  whole.summands = {{dims({2}), 1}};
  SemisimpleType doubled;
  doubled.summands = {{dims({1}), 2}};
  SemisimpleType split;
  split.summands = {{dims({1}), 1}, {dims({1}), 1}};
  split.canonicalize();
  CHECK(std::count(types.begin(), types.end(), whole) == 1);
  CHECK(std::count(types.begin(), types.end(), doubled) == 1);
  CHECK(std::count(types.begin(), types.end(), split) == 1);
}

TEST_CASE("strict policy excludes oracle-false dimensions") {
  auto types = enumerate_semisimple_types(kronecker_quiver(2), dims({2, 2}), OraclePolicy::Strict);
  CHECK(!contains_summand_dim(types, {2, 2}));  // extended Dynkin multiple
  CHECK(!contains_summand_dim(types, {2, 1}));  // oracle-unknown, strict drops it
  auto perm =
      enumerate_semisimple_types(kronecker_quiver(2), dims({2, 2}), OraclePolicy::Permissive);
  CHECK(!contains_summand_dim(perm, {2, 2}));  // oracle says no, both policies drop it
  CHECK(contains_summand_dim(perm, {2, 1}));
  CHECK(perm.size() > types.size());
}

TEST_CASE("enumeration cap raises") {
  CHECK_THROWS_AS(enumerate_semisimple_types(loop_quiver(2), dims({4}), OraclePolicy::Strict, 3),
                  Error);
}

TEST_CASE("auxiliary quivers on frozen examples") {
  Quiver s2 = loop_quiver(2);
  SemisimpleType t;
  t.summands = {{dims({1}), 2}};
  auto [aq, ad] = aux_quiver(s2, t);
  CHECK(aq.vcount() == 1);
  CHECK(aq.loops(0) == 2);
  CHECK(ad.v == std::vector<Int>{2});

  Quiver s3 = loop_quiver(3);
  SemisimpleType t2;
  t2.summands = {{dims({1}), 1}, {dims({2}), 1}};
  auto [aq2, ad2] = aux_quiver(s3, t2);
  CHECK(aq2.vcount() == 2);
  CHECK(aq2.loops(0) == 3);
  CHECK(aq2.loops(1) == 9);
  CHECK(aq2.arrows_between(0, 1) == 8);
  CHECK(ad2.v == std::vector<Int>{1, 1});
}

TEST_CASE("auxiliary arrow counts go negative off the totally negative world") {
  Quiver loopless = quiver_from_counts({0, 0}, {{0, 0}, {0, 0}});
  SemisimpleType t;
  t.summands = {{dims({1, 0}), 1}, {dims({2, 0}), 1}};
  CHECK_THROWS_AS(aux_quiver(loopless, t), Error);
}

TEST_CASE("stratification order on frozen examples") {
  SemisimpleType whole;
  whole.summands = {{dims({2}), 1}};
  SemisimpleType doubled;
  doubled.summands = {{dims({1}), 2}};
  SemisimpleType split;
  split.summands = {{dims({1}), 1}, {dims({1}), 1}};

  CHECK(types_leq(doubled, whole));        // {(1),2} <= {(2),1}
  CHECK_FALSE(types_leq(whole, doubled));
  CHECK(types_leq(doubled, split));        // {(1),2} <= {(1),1}+{(1),1}
  CHECK_FALSE(types_leq(split, doubled));

  SemisimpleType other_ambient;
  other_ambient.summands = {{dims({3}), 1}};
  CHECK_THROWS_AS(types_leq(whole, other_ambient), Error);
}

TEST_CASE("tau_min is least among enumerated types") {
  Quiver s2 = loop_quiver(2);
  for (Int k = 1; k <= 3; ++k) {
    SemisimpleType tmin = tau_min(s2, dims({k}));
    for (const auto& t : enumerate_semisimple_types(s2, dims({k}), OraclePolicy::Strict))
      CHECK(types_leq(tmin, t));
  }
}

TEST_CASE("top types of a doubled class") {
  SemisimpleType t;
  t.summands = {{dims({1}), 2}};
  auto tops = enumerate_top_types(t);
  REQUIRE(tops.size() == 2);
  TopType single{{1, 2}};
  TopType twice{{1, 1}, {1, 1}};
  CHECK(std::count(tops.begin(), tops.end(), single) == 1);
  CHECK(std::count(tops.begin(), tops.end(), twice) == 1);
}

TEST_CASE("z sequences") {
  Quiver s2 = loop_quiver(2);
  std::vector<DimVector> cdims = {dims({1})};
  CHECK(z_sequence({{1, 1}, {1, 1}}, cdims, s2) == std::vector<Int>{0, 1});
  CHECK(z_sequence({{1, 2}}, cdims, s2) == std::vector<Int>{0});
  CHECK(z_sequence({{1, 2}, {1, 3}, {1, 1}}, cdims, s2) == std::vector<Int>{0, 2, 3});

  // classes with self Euler value one never contribute
  Quiver a2 = path_quiver(2);
  std::vector<DimVector> unit_dims = {dims({1, 0}), dims({0, 1})};
  CHECK(z_sequence({{1, 1}, {2, 1}, {1, 2}, {1, 1}}, unit_dims, a2) ==
        std::vector<Int>{0, 0, 0, 0});
}

TEST_CASE("type json round trip") {
  Quiver pair = quiver_from_counts({2, 2}, {{0, 1}, {0, 0}});
  SemisimpleType t;
  t.summands = {{dims({1, 0}), 2}, {dims({1, 1}), 1}};
  t.canonicalize();
  auto j = t.to_json(pair);
  CHECK(SemisimpleType::from_json(pair, j) == t);
}
