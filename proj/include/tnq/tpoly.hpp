#pragma once

#include <cstdint>
#include <vector>

namespace tnq {

bool is_prime_u32(std::uint32_t q);

/// F_q[t]/(t^n), q prime. Units are the elements with nonzero constant term.
struct RingSpec {
  std::uint32_t q = 2;
  std::uint32_t n = 1;

  void validate() const;  // throws non-prime / schema
  bool operator==(const RingSpec&) const = default;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t q);

struct TruncatedPoly {
  RingSpec ring;
  std::vector<std::uint32_t> c;  // c[i] = coefficient of t^i, size n

  static TruncatedPoly zero(RingSpec r);
  static TruncatedPoly one(RingSpec r);
  static TruncatedPoly constant(RingSpec r, std::uint32_t value);
  static TruncatedPoly from_coeffs(RingSpec r, std::vector<std::uint32_t> coeffs);

  bool is_zero() const;
  bool is_unit() const { return c[0] != 0; }
  std::uint32_t valuation() const;  // n for zero

  TruncatedPoly operator+(const TruncatedPoly&) const;
  TruncatedPoly operator-(const TruncatedPoly&) const;
  TruncatedPoly operator*(const TruncatedPoly&) const;
  TruncatedPoly operator-() const;
  bool operator==(const TruncatedPoly&) const = default;

  TruncatedPoly inverse_of_unit() const;  // throws non-unit
  TruncatedPoly shifted_down(std::uint32_t v) const;  // divide by t^v; valuation >= v required
};

/// All q^n ring elements in deterministic order (coefficients read as a
/// little-endian base-q integer). Throws budget-exceeded when q^n > budget.
std::vector<TruncatedPoly> enumerate_ring(RingSpec r, unsigned long long budget = 1ull << 20);

}  // namespace tnq
