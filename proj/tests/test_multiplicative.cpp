#include <doctest.h>

#include "tnq/error.hpp"
#include "tnq/multiplicative.hpp"

using namespace tnq;

TEST_CASE("scalar loop counts") {
  Quiver jordan = loop_quiver(1);
  DimVector one = dims({1});
  // alpha = 1: everything with 1 + xy invertible; q^2 - (q-1) points
  CHECK(count::count_multiplicative_fiber(jordan, one, 2, {1}, 1) == 3);
  CHECK(count::count_multiplicative_fiber(jordan, one, 3, {1}, 1) == 7);
  CHECK(count::count_multiplicative_fiber(jordan, one, 5, {1}, 1) == 21);
  // scalars commute, so the relation forces alpha = 1
  CHECK(count::count_multiplicative_fiber(jordan, one, 3, {2}, 1) == 0);
  CHECK(count::count_multiplicative_fiber(jordan, one, 5, {4}, 1) == 0);
  // over the longer ring: q^(2n) - (q-1) q^(2n-2)
  CHECK(count::count_multiplicative_fiber(jordan, one, 2, {1}, 2) == 12);
  CHECK(count::count_multiplicative_fiber(jordan, one, 3, {1}, 2) == 63);
}

TEST_CASE("one-arrow relation couples the two scalars") {
  Quiver a2 = path_quiver(2);
  DimVector ones = dims({1, 1});
  // (1 + ba)^{-1} = alpha_1 and 1 + ab = alpha_2 force alpha_1 alpha_2 = 1
  CHECK(count::count_multiplicative_fiber(a2, ones, 3, {1, 1}, 1) == 5);  // ab = 0
  CHECK(count::count_multiplicative_fiber(a2, ones, 3, {2, 2}, 1) == 2);  // ab = 1
  CHECK(count::count_multiplicative_fiber(a2, ones, 3, {2, 1}, 1) == 0);
}

TEST_CASE("the zero assignment is a solution exactly at alpha = 1") {
  Quiver pair = quiver_from_counts({1, 1}, {{0, 1}, {0, 0}});
  DimVector ones = dims({1, 1});
  CHECK(count::count_multiplicative_fiber(pair, ones, 3, {1, 1}, 1) >= 1);
}

TEST_CASE("order independence on a noncommutative instance") {
  Quiver s2 = loop_quiver(2);
  DimVector two = dims({2});
  std::vector<int> swapped = {1, 0};
  mpz_class a = count::count_multiplicative_fiber(s2, two, 2, {1}, 1);
  mpz_class b = count::count_multiplicative_fiber(s2, two, 2, {1}, 1, &swapped);
  CHECK(a == b);
  CHECK(a >= 1);  // the zero assignment satisfies alpha = 1
}

TEST_CASE("validation") {
  Quiver jordan = loop_quiver(1);
  CHECK_THROWS_AS(count::count_multiplicative_fiber(jordan, dims({1}), 3, {0}, 1), Error);
  CHECK_THROWS_AS(count::count_multiplicative_fiber(jordan, dims({1}), 3, {3}, 1), Error);
  CHECK_THROWS_AS(count::count_multiplicative_fiber(jordan, dims({2}), 3, {1}, 2, nullptr, 10),
                  Error);  // budget
  std::vector<int> bad_order = {0, 0};
  Quiver s2 = loop_quiver(2);
  CHECK_THROWS_AS(count::count_multiplicative_fiber(s2, dims({1}), 2, {1}, 1, &bad_order), Error);
}
