#include "tnq/ringmat.hpp"

#include <cstring>

#include "tnq/error.hpp"

namespace tnq {

RingMatrix RingMatrix::zero(RingSpec r, int rows, int cols) {
  r.validate();
  if (rows < 0 || cols < 0) throw Error("schema", "negative matrix dimensions");
  RingMatrix m;
  m.ring = r;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols * r.n, 0);
  return m;
}

RingMatrix RingMatrix::identity(RingSpec r, int n) {
  RingMatrix m = zero(r, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, TruncatedPoly::one(r));
  return m;
}

TruncatedPoly RingMatrix::get(int r, int c) const {
  TruncatedPoly p = TruncatedPoly::zero(ring);
  const std::uint32_t* src = a.data() + (static_cast<size_t>(r) * cols + c) * ring.n;
  std::copy(src, src + ring.n, p.c.begin());
  return p;
}

void RingMatrix::set(int r, int c, const TruncatedPoly& p) {
  if (!(p.ring == ring)) throw Error("ring-mismatch", "entry lives in a different ring");
  std::uint32_t* dst = a.data() + (static_cast<size_t>(r) * cols + c) * ring.n;
  std::copy(p.c.begin(), p.c.end(), dst);
}

namespace {

inline std::uint32_t valuation_of(const std::uint32_t* e, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i)
    if (e[i]) return i;
  return n;
}

// r[k] -= (w * p)[k], all length n, reduced mod q
inline void submul(std::uint32_t* r, const std::uint32_t* w, const std::uint32_t* p,
                   std::uint32_t q, std::uint32_t n) {
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j <= k; ++j) acc += static_cast<std::uint64_t>(w[j]) * p[k - j];
    std::uint32_t sub = static_cast<std::uint32_t>(acc % q);
    r[k] = (r[k] + q - sub) % q;
  }
}

// r <- r * u, truncated product
inline void mulassign(std::uint32_t* r, const std::uint32_t* u, std::uint32_t q, std::uint32_t n,
                      std::uint32_t* tmp) {
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j <= k; ++j) acc += static_cast<std::uint64_t>(r[j]) * u[k - j];
    tmp[k] = static_cast<std::uint32_t>(acc % q);
  }
  std::memcpy(r, tmp, n * sizeof(std::uint32_t));
}

// inverse of a unit, coefficients in u, result in out
inline void unit_inverse(const std::uint32_t* u, std::uint32_t* out, std::uint32_t q,
                         std::uint32_t n) {
  std::uint32_t i0 = mod_inverse(u[0], q);
  out[0] = i0;
  for (std::uint32_t k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 1; j <= k; ++j) acc += static_cast<std::uint64_t>(u[j]) * out[k - j];
    acc %= q;
    out[k] = static_cast<std::uint32_t>(((q - acc) * static_cast<std::uint64_t>(i0)) % q);
  }
}

struct Workspace {
  std::vector<int> rsel, csel;
  std::vector<std::uint32_t> w, u, uinv, tmp;
  void init(int rows, int cols, std::uint32_t n) {
    rsel.resize(static_cast<size_t>(rows));
    csel.resize(static_cast<size_t>(cols));
    for (int i = 0; i < rows; ++i) rsel[static_cast<size_t>(i)] = i;
    for (int j = 0; j < cols; ++j) csel[static_cast<size_t>(j)] = j;
    w.assign(n, 0);
    u.assign(n, 0);
    uinv.assign(n, 0);
    tmp.assign(n, 0);
  }
};

thread_local Workspace tls_ws;

// Core elimination. When b != nullptr the system is affine (Mx = b) and the
// return value is nullopt on inconsistency.
std::optional<long> eliminate(std::uint32_t* a, std::uint32_t* b, int rows, int cols,
                              std::uint32_t q, std::uint32_t n) {
  Workspace& ws = tls_ws;
  ws.init(rows, cols, n);
  auto ent = [&](int r, int c) { return a + (static_cast<size_t>(r) * cols + c) * n; };
  auto bent = [&](int r) { return b + static_cast<size_t>(r) * n; };

  long k = 0;
  while (!ws.rsel.empty() && !ws.csel.empty()) {
    std::uint32_t best = n;
    size_t bri = 0, bci = 0;
    for (size_t ri = 0; ri < ws.rsel.size() && best > 0; ++ri)
      for (size_t ci = 0; ci < ws.csel.size(); ++ci) {
        std::uint32_t v = valuation_of(ent(ws.rsel[ri], ws.csel[ci]), n);
        if (v < best) {
          best = v;
          bri = ri;
          bci = ci;
          if (best == 0) break;
        }
      }
    if (best == n) break;  // active submatrix is zero
    int pr = ws.rsel[bri];
    int pc = ws.csel[bci];
    std::uint32_t v = best;

    // normalize pivot row: divide by the unit part of the pivot
    const std::uint32_t* pivot = ent(pr, pc);
    for (std::uint32_t i = 0; i + v < n; ++i) ws.u[i] = pivot[i + v];
    for (std::uint32_t i = n - v; i < n; ++i) ws.u[i] = 0;
    unit_inverse(ws.u.data(), ws.uinv.data(), q, n);
    for (int c : ws.csel) mulassign(ent(pr, c), ws.uinv.data(), q, n, ws.tmp.data());
    if (b) mulassign(bent(pr), ws.uinv.data(), q, n, ws.tmp.data());

    // clear the pivot column in the other active rows
    for (int r : ws.rsel) {
      if (r == pr) continue;
      const std::uint32_t* e = ent(r, pc);
      if (valuation_of(e, n) == n) continue;
      for (std::uint32_t i = 0; i + v < n; ++i) ws.w[i] = e[i + v];
      for (std::uint32_t i = n - v; i < n; ++i) ws.w[i] = 0;
      for (int c : ws.csel) submul(ent(r, c), ws.w.data(), ent(pr, c), q, n);
      if (b) submul(bent(r), ws.w.data(), bent(pr), q, n);
    }

    if (b && valuation_of(bent(pr), n) < v) return std::nullopt;
    k += v;
    ws.rsel.erase(ws.rsel.begin() + static_cast<long>(bri));
    ws.csel.erase(ws.csel.begin() + static_cast<long>(bci));
  }
  if (b)
    for (int r : ws.rsel)
      if (valuation_of(bent(r), n) < n) return std::nullopt;
  k += static_cast<long>(n) * static_cast<long>(ws.csel.size());
  return k;
}

}  // namespace

long kernel_exponent_inplace(std::uint32_t* a, int rows, int cols, std::uint32_t q,
                             std::uint32_t n) {
  return *eliminate(a, nullptr, rows, cols, q, n);
}

std::optional<long> affine_exponent_inplace(std::uint32_t* a, std::uint32_t* b, int rows, int cols,
                                            std::uint32_t q, std::uint32_t n) {
  return eliminate(a, b, rows, cols, q, n);
}

long RingMatrix::kernel_size_exponent() const {
  std::vector<std::uint32_t> copy = a;
  return kernel_exponent_inplace(copy.data(), rows, cols, ring.q, ring.n);
}

std::optional<long> RingMatrix::solution_count_exponent(
    const std::vector<std::uint32_t>& rhs) const {
  if (rhs.size() != static_cast<size_t>(rows) * ring.n)
    throw Error("schema", "rhs length must be rows*n");
  std::vector<std::uint32_t> ca = a;
  std::vector<std::uint32_t> cb = rhs;
  return affine_exponent_inplace(ca.data(), cb.data(), rows, cols, ring.q, ring.n);
}

}  // namespace tnq
