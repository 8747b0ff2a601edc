#pragma once

#include <vector>

#include "tnq/quiver.hpp"

namespace tnq {

/// Connectivity of the underlying undirected multigraph.
bool is_connected(const Quiver& q);

/// Connectivity of the full subquiver on supp(d). d != 0 required.
bool support_connected(const Quiver& q, const DimVector& d);

/// Indices into q.arrows of all bridges of the underlying multigraph.
/// Loops and parallel arrows are never bridges. Throws on disconnected input.
std::vector<int> bridges(const Quiver& q);

bool is_two_edge_connected(const Quiver& q);

/// b(Q) = 1 - #vertices + #arrows (loops included).
Int b_invariant(const Quiver& q);

/// True iff b(Q) > sum of b over the blocks of every set partition of the
/// vertices into >= 2 blocks (full subquivers, formula applied verbatim).
bool two_connected_via_decompositions(const Quiver& q);

}  // namespace tnq
