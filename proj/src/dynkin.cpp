#include "tnq/dynkin.hpp"

#include <gmpxx.h>

#include <numeric>

#include "tnq/forms.hpp"

namespace tnq {

namespace {

using RMat = std::vector<std::vector<mpq_class>>;

RMat to_rational(const std::vector<std::vector<Int>>& a) {
  RMat m(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) m[i].emplace_back(static_cast<long>(a[i][j]));
  return m;
}

// Row echelon; returns rank. Columns of pivots recorded in pivot_col.
int rref(RMat& m, std::vector<int>& pivot_col) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    mpq_class inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

bool sym_matrix_psd(const std::vector<std::vector<Int>>& a) {
  RMat m = to_rational(a);
  size_t n = m.size();
  // Schur-complement recursion. A PSD matrix with a zero diagonal entry has a
  // zero row, which keeps the zero-pivot branch sound.
  std::vector<size_t> live;
  for (size_t i = 0; i < n; ++i) live.push_back(i);
  while (!live.empty()) {
    size_t i0 = live.front();
    mpq_class piv = m[i0][i0];
    if (piv < 0) return false;
    if (piv == 0) {
      for (size_t j : live)
        if (m[i0][j] != 0) return false;
      live.erase(live.begin());
      continue;
    }
    for (size_t r = 1; r < live.size(); ++r)
      for (size_t c = 1; c < live.size(); ++c) {
        size_t ri = live[r], ci = live[c];
        m[ri][ci] -= m[ri][i0] * m[i0][ci] / piv;
      }
    live.erase(live.begin());
  }
  return true;
}

int matrix_nullity(const std::vector<std::vector<Int>>& a) {
  RMat m = to_rational(a);
  std::vector<int> pc;
  int rank = rref(m, pc);
  return static_cast<int>(a.size()) - rank;
}

std::optional<std::vector<Int>> kernel_primitive_positive(
    const std::vector<std::vector<Int>>& a) {
  size_t n = a.size();
  RMat m = to_rational(a);
  std::vector<int> pc;
  int rank = rref(m, pc);
  if (static_cast<int>(n) - rank != 1) return std::nullopt;
  std::vector<bool> is_pivot(n, false);
  for (int c : pc) is_pivot[static_cast<size_t>(c)] = true;
  int free_col = -1;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = static_cast<int>(c);
  std::vector<mpq_class> x(n, 0);
  x[static_cast<size_t>(free_col)] = 1;
  for (size_t r = 0; r < pc.size(); ++r)
    x[static_cast<size_t>(pc[r])] = -m[r][static_cast<size_t>(free_col)];
  // clear denominators, divide out content, normalize sign
  mpz_class lcm = 1;
  for (const auto& v : x) {
    mpz_class den = v.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> xi(n);
  for (size_t i = 0; i < n; ++i) {
    mpq_class scaled = x[i] * mpq_class(lcm);
    xi[i] = scaled.get_num();  // denominator is 1 after scaling
  }
  mpz_class content = 0;
  for (const auto& v : xi) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content == 0) return std::nullopt;
  bool any_neg = false, any_pos = false;
  for (auto& v : xi) {
    v /= content;
    if (v < 0) any_neg = true;
    if (v > 0) any_pos = true;
  }
  if (any_neg && any_pos) return std::nullopt;
  if (any_neg)
    for (auto& v : xi) v = -v;
  std::vector<Int> out;
  for (const auto& v : xi) {
    if (v <= 0) return std::nullopt;  // strictly positive required
    out.push_back(static_cast<Int>(v.get_si()));
  }
  return out;
}

std::optional<DimVector> extended_dynkin_root(const Quiver& q) {
  EulerMatrix m = EulerMatrix::of(q);
  if (!sym_matrix_psd(m.c)) return std::nullopt;
  auto ker = kernel_primitive_positive(m.c);
  if (!ker) return std::nullopt;
  return DimVector{*ker};
}

}  // namespace tnq
