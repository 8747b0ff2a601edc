#include <doctest.h>

#include <numeric>

#include "tnq/catalog.hpp"
#include "tnq/dynkin.hpp"
#include "tnq/forms.hpp"

using namespace tnq;

namespace {

// independent PSD oracle: every principal minor of a symmetric matrix is
// non-negative (exact integer determinants, all subsets)
Int principal_minor(const std::vector<std::vector<Int>>& a, const std::vector<int>& rows) {
  int k = static_cast<int>(rows.size());
  std::vector<std::vector<Int>> m(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          a[static_cast<size_t>(rows[static_cast<size_t>(i)])]
           [static_cast<size_t>(rows[static_cast<size_t>(j)])];
  // Laplace expansion is fine at k <= 3
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool psd_by_minors(const std::vector<std::vector<Int>>& a) {
  int n = static_cast<int>(a.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) rows.push_back(i);
    if (principal_minor(a, rows) < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("extended Dynkin roots on frozen examples") {
  auto kron = extended_dynkin_root(kronecker_quiver(2));
  REQUIRE(kron.has_value());
  CHECK(kron->v == std::vector<Int>{1, 1});

  auto jordan = extended_dynkin_root(loop_quiver(1));
  REQUIRE(jordan.has_value());
  CHECK(jordan->v == std::vector<Int>{1});

  CHECK(!extended_dynkin_root(loop_quiver(2)).has_value());
  CHECK(!extended_dynkin_root(path_quiver(2)).has_value());  // positive definite

  auto cyc = extended_dynkin_root(cycle_quiver(3));
  REQUIRE(cyc.has_value());
  CHECK(cyc->v == std::vector<Int>{1, 1, 1});

  // star with one center and four leaves, single arrows
  Quiver star = Quiver::make({"c", "l1", "l2", "l3", "l4"},
                             {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}});
  auto droot = extended_dynkin_root(star);
  REQUIRE(droot.has_value());
  CHECK(droot->v == std::vector<Int>{2, 1, 1, 1, 1});
}

TEST_CASE("returned roots satisfy the kernel and primitivity contract") {
  for (const Quiver& q : catalog::small_quiver_corpus(3, 2, 2)) {
    auto root = extended_dynkin_root(q);
    if (!root) continue;
    EulerMatrix m = EulerMatrix::of(q);
    Int g = 0;
    for (int i = 0; i < q.vcount(); ++i) {
      CHECK(root->v[static_cast<size_t>(i)] >= 1);
      g = std::gcd(g, root->v[static_cast<size_t>(i)]);
      Int row = 0;
      for (int j = 0; j < q.vcount(); ++j)
        row += m.c[static_cast<size_t>(i)][static_cast<size_t>(j)] * root->v[static_cast<size_t>(j)];
      CHECK(row == 0);
    }
    CHECK(g == 1);
  }
}

TEST_CASE("exact PSD matches the principal-minor oracle exhaustively") {
  // all symmetric 2x2 with entries in [-3,3]
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b)
      for (Int d = -3; d <= 3; ++d) {
        std::vector<std::vector<Int>> m = {{a, b}, {b, d}};
        CHECK(sym_matrix_psd(m) == psd_by_minors(m));
      }
  // all symmetric 3x3 with entries in [-2,2]
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c)
        for (Int d = -2; d <= 2; ++d)
          for (Int e = -2; e <= 2; ++e)
            for (Int f = -2; f <= 2; ++f) {
              std::vector<std::vector<Int>> m = {{a, b, c}, {b, d, e}, {c, e, f}};
              REQUIRE(sym_matrix_psd(m) == psd_by_minors(m));
            }
}

TEST_CASE("nullity on small cases") {
  CHECK(matrix_nullity({{0}}) == 1);
  CHECK(matrix_nullity({{2, -2}, {-2, 2}}) == 1);
  CHECK(matrix_nullity({{2, -1}, {-1, 2}}) == 0);
  CHECK(matrix_nullity({{0, 0}, {0, 0}}) == 2);
}
