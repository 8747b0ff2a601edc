#include <doctest.h>

#include <random>

#include "tnq/error.hpp"
#include "tnq/forms.hpp"

using namespace tnq;

namespace {

DimVector random_dims(int n, std::mt19937& rng, Int lo = 0, Int hi = 5) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  DimVector d = DimVector::zeros(n);
  for (auto& x : d.v) x = dist(rng);
  return d;
}

}  // namespace

TEST_CASE("euler form on frozen examples") {
  Quiver s2 = loop_quiver(2);
  CHECK(euler_form(s2, dims({1}), dims({1})) == -1);
  Quiver a2 = path_quiver(2);
  CHECK(euler_form(a2, dims({1, 1}), dims({1, 1})) == 1);
  CHECK(euler_form(a2, dims({0, 0}), dims({3, 7})) == 0);
}

TEST_CASE("sym form on frozen examples") {
  Quiver s2 = loop_quiver(2);
  CHECK(sym_form(s2, dims({1}), dims({1})) == -2);
  Quiver a2 = path_quiver(2);
  CHECK(sym_form(a2, dims({1, 0}), dims({0, 1})) == -1);
}

TEST_CASE("bilinearity and symmetry on random instances") {
  std::mt19937 rng(7);
  Quiver q = quiver_from_counts({2, 1, 0}, {{0, 2, 1}, {0, 0, 3}, {0, 0, 0}});
  for (int t = 0; t < 100; ++t) {
    DimVector d = random_dims(3, rng), d2 = random_dims(3, rng), e = random_dims(3, rng);
    DimVector sum = d;
    for (size_t i = 0; i < sum.v.size(); ++i) sum.v[i] += d2.v[i];
    CHECK(euler_form(q, sum, e) == euler_form(q, d, e) + euler_form(q, d2, e));
    CHECK(sym_form(q, d, e) == sym_form(q, e, d));
  }
}

TEST_CASE("euler matrix agrees with the defining sum") {
  std::mt19937 rng(11);
  Quiver q = quiver_from_counts({1, 3}, {{0, 2}, {0, 0}});
  EulerMatrix m = EulerMatrix::of(q);
  for (int i = 0; i < q.vcount(); ++i) {
    CHECK(m.c[static_cast<size_t>(i)][static_cast<size_t>(i)] == 2 - 2 * q.loops(i));
    for (int j = 0; j < q.vcount(); ++j)
      CHECK(m.c[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            m.c[static_cast<size_t>(j)][static_cast<size_t>(i)]);
  }
  for (int t = 0; t < 50; ++t) {
    DimVector d = random_dims(2, rng), e = random_dims(2, rng);
    CHECK(m.euler(d, e) == euler_form(q, d, e));
    CHECK(m.sym(d, e) == sym_form(q, d, e));
  }
}

TEST_CASE("total negativity structural test") {
  CHECK(is_totally_negative(loop_quiver(2)).totally_negative);
  auto jordan = is_totally_negative(loop_quiver(1));
  CHECK(!jordan.totally_negative);
  REQUIRE(jordan.witness.has_value());
  CHECK(jordan.witness->first == jordan.witness->second);
  Quiver pair = quiver_from_counts({2, 2}, {{0, 1}, {0, 0}});
  CHECK(is_totally_negative(pair).totally_negative);
  Quiver unjoined = quiver_from_counts({2, 2}, {{0, 0}, {0, 0}});
  auto tn = is_totally_negative(unjoined);
  CHECK(!tn.totally_negative);
  CHECK(sym_form(unjoined, DimVector::unit(2, tn.witness->first),
                 DimVector::unit(2, tn.witness->second)) >= 0);
}

TEST_CASE("fundamental domain") {
  Quiver tneg = quiver_from_counts({2, 2}, {{0, 1}, {0, 0}});
  for (Int a = 0; a <= 4; ++a)
    for (Int b = 0; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(fundamental_domain_contains(tneg, dims({a, b})));
    }
  CHECK(!fundamental_domain_contains(path_quiver(2), dims({1, 1})));
  CHECK(!fundamental_domain_contains(loop_quiver(1), dims({1})));  // (eps,eps)=0, strict
  CHECK(in_fundamental_region(loop_quiver(1), dims({1})));
  CHECK_THROWS_AS(fundamental_domain_contains(tneg, dims({0, 0})), Error);
  // disconnected support fails
  Quiver three = quiver_from_counts({2, 0, 2}, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(!fundamental_domain_contains(three, dims({1, 0, 1})));
}
