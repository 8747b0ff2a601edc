#pragma once

#include <optional>

#include "tnq/tpoly.hpp"

namespace tnq {

/// Dense matrix over F_q[t]/(t^n); entries flattened as a[(r*cols+c)*n + k].
struct RingMatrix {
  RingSpec ring;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> a;

  static RingMatrix zero(RingSpec r, int rows, int cols);
  static RingMatrix identity(RingSpec r, int n);

  TruncatedPoly get(int r, int c) const;
  void set(int r, int c, const TruncatedPoly& p);

  /// Exponent k with #ker(M) = q^k over the chain ring.
  long kernel_size_exponent() const;

  /// Exponent k with #solutions(Mx = b) = q^k, or nullopt when inconsistent.
  /// rhs holds rows*n coefficients.
  std::optional<long> solution_count_exponent(const std::vector<std::uint32_t>& rhs) const;
};

// In-place elimination cores working on raw coefficient buffers; `a` is
// destroyed. Pivoting on minimal-valuation entries; rows are divided by
// units, so the pivot column clears exactly. Used directly by the counting
// loops to avoid per-call allocation.
long kernel_exponent_inplace(std::uint32_t* a, int rows, int cols, std::uint32_t q,
                             std::uint32_t n);
std::optional<long> affine_exponent_inplace(std::uint32_t* a, std::uint32_t* b, int rows, int cols,
                                            std::uint32_t q, std::uint32_t n);

}  // namespace tnq
