#include "tnq/tpoly.hpp"

#include "tnq/error.hpp"

namespace tnq {

bool is_prime_u32(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

void RingSpec::validate() const {
  if (!is_prime_u32(q)) throw Error("non-prime", "ring modulus must be prime, got " + std::to_string(q));
  if (n < 1) throw Error("schema", "ring length must be >= 1");
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t q) {
  if (a % q == 0) throw Error("non-unit", "no inverse of 0");
  std::int64_t t = 0, newt = 1, r = q, newr = a % q;
  while (newr != 0) {
    std::int64_t quo = r / newr;
    t -= quo * newt;
    std::swap(t, newt);
    r -= quo * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += q;
  return static_cast<std::uint32_t>(t);
}

TruncatedPoly TruncatedPoly::zero(RingSpec r) {
  r.validate();
  return {r, std::vector<std::uint32_t>(r.n, 0)};
}

TruncatedPoly TruncatedPoly::one(RingSpec r) { return constant(r, 1); }

TruncatedPoly TruncatedPoly::constant(RingSpec r, std::uint32_t value) {
  TruncatedPoly p = zero(r);
  p.c[0] = value % r.q;
  return p;
}

TruncatedPoly TruncatedPoly::from_coeffs(RingSpec r, std::vector<std::uint32_t> coeffs) {
  r.validate();
  if (coeffs.size() != r.n) throw Error("schema", "coefficient list must have length n");
  for (auto& x : coeffs) x %= r.q;
  return {r, std::move(coeffs)};
}

bool TruncatedPoly::is_zero() const {
  for (auto x : c)
    if (x) return false;
  return true;
}

std::uint32_t TruncatedPoly::valuation() const {
  for (std::uint32_t i = 0; i < ring.n; ++i)
    if (c[i]) return i;
  return ring.n;
}

namespace {
void check_rings(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (!(a.ring == b.ring)) throw Error("ring-mismatch", "operands live in different rings");
}
}  // namespace

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& o) const {
  check_rings(*this, o);
  TruncatedPoly r = *this;
  for (std::uint32_t i = 0; i < ring.n; ++i) r.c[i] = (r.c[i] + o.c[i]) % ring.q;
  return r;
}

TruncatedPoly TruncatedPoly::operator-(const TruncatedPoly& o) const {
  check_rings(*this, o);
  TruncatedPoly r = *this;
  for (std::uint32_t i = 0; i < ring.n; ++i) r.c[i] = (r.c[i] + ring.q - o.c[i]) % ring.q;
  return r;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const {
  check_rings(*this, o);
  TruncatedPoly r = zero(ring);
  for (std::uint32_t i = 0; i < ring.n; ++i) {
    if (!c[i]) continue;
    for (std::uint32_t j = 0; i + j < ring.n; ++j)
      r.c[i + j] = (r.c[i + j] + static_cast<std::uint64_t>(c[i]) * o.c[j]) % ring.q;
  }
  return r;
}

TruncatedPoly TruncatedPoly::operator-() const {
  TruncatedPoly r = *this;
  for (std::uint32_t i = 0; i < ring.n; ++i) r.c[i] = (ring.q - r.c[i]) % ring.q;
  return r;
}

TruncatedPoly TruncatedPoly::inverse_of_unit() const {
  if (!is_unit()) throw Error("non-unit", "inverse requires a unit (nonzero constant term)");
  TruncatedPoly inv = zero(ring);
  std::uint32_t i0 = mod_inverse(c[0], ring.q);
  inv.c[0] = i0;
  // lift coefficient by coefficient: (sum_k inv_k t^k) * this == 1
  for (std::uint32_t k = 1; k < ring.n; ++k) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 1; j <= k; ++j) acc += static_cast<std::uint64_t>(c[j]) * inv.c[k - j];
    acc %= ring.q;
    inv.c[k] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(ring.q - acc) * i0) % ring.q);
  }
  return inv;
}

TruncatedPoly TruncatedPoly::shifted_down(std::uint32_t v) const {
  if (valuation() < v) throw Error("precondition", "valuation too small for shift");
  TruncatedPoly r = zero(ring);
  for (std::uint32_t i = 0; i + v < ring.n; ++i) r.c[i] = c[i + v];
  return r;
}

std::vector<TruncatedPoly> enumerate_ring(RingSpec r, unsigned long long budget) {
  r.validate();
  unsigned long long total = 1;
  for (std::uint32_t i = 0; i < r.n; ++i) {
    if (total > budget / r.q + 1) throw Error("budget-exceeded", "ring too large to enumerate");
    total *= r.q;
  }
  if (total > budget) throw Error("budget-exceeded", "ring too large to enumerate");
  std::vector<TruncatedPoly> out;
  out.reserve(total);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    TruncatedPoly p = TruncatedPoly::zero(r);
    unsigned long long x = idx;
    for (std::uint32_t i = 0; i < r.n; ++i) {
      p.c[i] = static_cast<std::uint32_t>(x % r.q);
      x /= r.q;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tnq
