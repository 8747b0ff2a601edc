#include "tnq/multiplicative.hpp"

#include <algorithm>

#include "tnq/error.hpp"
#include "tnq/tpoly.hpp"

namespace tnq {
namespace count {

namespace {

using Mat = std::vector<std::vector<TruncatedPoly>>;

Mat mat_zero(RingSpec r, int rows, int cols) {
  return Mat(static_cast<size_t>(rows),
             std::vector<TruncatedPoly>(static_cast<size_t>(cols), TruncatedPoly::zero(r)));
}

Mat mat_identity(RingSpec r, int n) {
  Mat m = mat_zero(r, n, n);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = TruncatedPoly::one(r);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, RingSpec r) {
  int rows = static_cast<int>(a.size());
  int mid = rows ? static_cast<int>(a[0].size()) : 0;
  int cols = mid && !b.empty() ? static_cast<int>(b[0].size()) : 0;
  Mat out = mat_zero(r, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < mid; ++k) {
      const TruncatedPoly& aik = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (aik.is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] +
            aik * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  return out;
}

// Gauss-Jordan with unit pivots; over the local ring this succeeds exactly
// when the matrix is invertible.
bool mat_inverse(const Mat& m, RingSpec r, Mat& out) {
  int n = static_cast<int>(m.size());
  Mat a = m;
  out = mat_identity(r, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(c)].is_unit()) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(c)]);
    std::swap(out[static_cast<size_t>(piv)], out[static_cast<size_t>(c)]);
    TruncatedPoly inv = a[static_cast<size_t>(c)][static_cast<size_t>(c)].inverse_of_unit();
    for (int j = 0; j < n; ++j) {
      a[static_cast<size_t>(c)][static_cast<size_t>(j)] =
          a[static_cast<size_t>(c)][static_cast<size_t>(j)] * inv;
      out[static_cast<size_t>(c)][static_cast<size_t>(j)] =
          out[static_cast<size_t>(c)][static_cast<size_t>(j)] * inv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      TruncatedPoly f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
            f * a[static_cast<size_t>(c)][static_cast<size_t>(j)];
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] -
            f * out[static_cast<size_t>(c)][static_cast<size_t>(j)];
      }
    }
  }
  return true;
}

bool mat_is_scalar(const Mat& m, std::uint32_t value, RingSpec r) {
  int n = static_cast<int>(m.size());
  TruncatedPoly want = TruncatedPoly::constant(r, value);
  TruncatedPoly zero = TruncatedPoly::zero(r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const TruncatedPoly& e = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == j ? !(e == want) : !(e == zero)) return false;
    }
  return true;
}

}  // namespace

mpz_class count_multiplicative_fiber(const Quiver& q, const DimVector& d, std::uint32_t qprime,
                                     const std::vector<std::uint32_t>& alpha, std::uint32_t n,
                                     const std::vector<int>* arrow_order,
                                     unsigned long long budget) {
  RingSpec spec{qprime, n};
  spec.validate();
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  if (static_cast<int>(alpha.size()) != q.vcount())
    throw Error("vertex-mismatch", "alpha must assign every vertex");
  for (std::uint32_t a : alpha)
    if (a % qprime == 0) throw Error("zero-alpha", "alpha entries must be nonzero mod q");

  std::vector<int> order;
  if (arrow_order) {
    order = *arrow_order;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < q.acount(); ++i)
      if (sorted[static_cast<size_t>(i)] != i)
        throw Error("schema", "arrow order must be a permutation of the arrows");
  } else {
    for (int a = 0; a < q.acount(); ++a) order.push_back(a);
  }

  // variable layout: per arrow a, M_a is d_t x d_s and M_a* is d_s x d_t
  int nscalars = 0;
  for (const auto& [s, t] : q.arrows)
    nscalars += 2 * static_cast<int>(d.v[static_cast<size_t>(s)] * d.v[static_cast<size_t>(t)]);
  int ndigits = nscalars * static_cast<int>(n);

  mpz_class total_points;
  mpz_ui_pow_ui(total_points.get_mpz_t(), qprime, static_cast<unsigned long>(ndigits));
  if (total_points > mpz_class(budget))
    throw Error("budget-exceeded", "multiplicative enumeration of " + total_points.get_str() +
                                       " points exceeds budget");
  unsigned long long total = total_points.get_ui();

  std::vector<std::uint32_t> digits(static_cast<size_t>(ndigits), 0);
  mpz_class found = 0;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    // unpack matrices
    std::vector<Mat> fwd, bwd;
    size_t at = 0;
    auto take = [&](int rows, int cols) {
      Mat m = mat_zero(spec, rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          TruncatedPoly p = TruncatedPoly::zero(spec);
          for (std::uint32_t k = 0; k < n; ++k) p.c[k] = digits[at++];
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(p);
        }
      return m;
    };
    for (const auto& [s, t] : q.arrows) {
      int ds = static_cast<int>(d.v[static_cast<size_t>(s)]);
      int dt = static_cast<int>(d.v[static_cast<size_t>(t)]);
      fwd.push_back(take(dt, ds));
      bwd.push_back(take(ds, dt));
    }

    bool ok = true;
    std::vector<Mat> plus, star_inv;
    plus.resize(static_cast<size_t>(q.acount()));
    star_inv.resize(static_cast<size_t>(q.acount()));
    for (int a = 0; a < q.acount() && ok; ++a) {
      auto [s, t] = q.arrows[static_cast<size_t>(a)];
      int ds = static_cast<int>(d.v[static_cast<size_t>(s)]);
      int dt = static_cast<int>(d.v[static_cast<size_t>(t)]);
      Mat p = mat_mul(fwd[static_cast<size_t>(a)], bwd[static_cast<size_t>(a)], spec);
      for (int i = 0; i < dt; ++i)
        p[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            p[static_cast<size_t>(i)][static_cast<size_t>(i)] + TruncatedPoly::one(spec);
      Mat ps = mat_mul(bwd[static_cast<size_t>(a)], fwd[static_cast<size_t>(a)], spec);
      for (int i = 0; i < ds; ++i)
        ps[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            ps[static_cast<size_t>(i)][static_cast<size_t>(i)] + TruncatedPoly::one(spec);
      // both factors must be invertible
      Mat pinv_unused, psinv;
      if (!mat_inverse(p, spec, pinv_unused)) ok = false;
      if (ok && !mat_inverse(ps, spec, psinv)) ok = false;
      if (ok) {
        plus[static_cast<size_t>(a)] = std::move(p);
        star_inv[static_cast<size_t>(a)] = std::move(psinv);
      }
    }

    if (ok) {
      for (int i = 0; i < q.vcount() && ok; ++i) {
        int di = static_cast<int>(d.v[static_cast<size_t>(i)]);
        if (di == 0) continue;
        Mat prod = mat_identity(spec, di);
        for (int a : order)
          if (q.arrows[static_cast<size_t>(a)].second == i)
            prod = mat_mul(prod, plus[static_cast<size_t>(a)], spec);
        for (int a : order)
          if (q.arrows[static_cast<size_t>(a)].first == i)
            prod = mat_mul(prod, star_inv[static_cast<size_t>(a)], spec);
        if (!mat_is_scalar(prod, alpha[static_cast<size_t>(i)], spec)) ok = false;
      }
      if (ok) ++found;
    }

    // bump odometer
    for (auto& dg : digits) {
      if (++dg == qprime) {
        dg = 0;
      } else {
        break;
      }
    }
  }
  return found;
}

}  // namespace count
}  // namespace tnq
