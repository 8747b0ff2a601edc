#pragma once

#include <optional>
#include <vector>

#include "tnq/quiver.hpp"

namespace tnq {

/// Exact positive-semidefiniteness of a symmetric integer matrix, decided by
/// rational elimination (zero pivot with a nonzero row disqualifies).
bool sym_matrix_psd(const std::vector<std::vector<Int>>& a);

/// Dimension of the rational kernel.
int matrix_nullity(const std::vector<std::vector<Int>>& a);

/// One-dimensional kernel spanned by a strictly positive vector, returned
/// primitive (integer entries, gcd 1); nullopt otherwise.
std::optional<std::vector<Int>> kernel_primitive_positive(const std::vector<std::vector<Int>>& a);

/// Spectral detection of extended Dynkin quivers: the symmetrized Euler matrix
/// is PSD with nullity one and strictly positive kernel. Returns the minimal
/// imaginary root when so. Captures the one-loop vertex and the multi-arrow
/// two-vertex cases uniformly, without diagram pattern matching.
std::optional<DimVector> extended_dynkin_root(const Quiver& q);

}  // namespace tnq
