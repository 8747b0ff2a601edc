#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "tnq/quiver.hpp"

namespace tnq {
namespace count {

/// Brute-force count of multiplicative preprojective relations over
/// F_q[t]/(t^n): tuples (M_a, M_a*) with I + M_a M_a* and I + M_a* M_a
/// invertible and, at every vertex i, the ordered product
///   prod_{t(a)=i} (I + M_a M_a*) * prod_{s(a)=i} (I + M_a* M_a)^{-1}
/// equal to alpha_i I. Products run over the fixed total arrow order
/// (`arrow_order` permutes it; identity by default); counts do not depend on
/// the choice. No half of the relation is linear, hence no kernel shortcut.
mpz_class count_multiplicative_fiber(const Quiver& q, const DimVector& d, std::uint32_t qprime,
                                     const std::vector<std::uint32_t>& alpha, std::uint32_t n,
                                     const std::vector<int>* arrow_order = nullptr,
                                     unsigned long long budget = 1ull << 24);

}  // namespace count
}  // namespace tnq
