#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tnq/quiver.hpp"

namespace tnq {
namespace catalog {

/// All quivers on nv vertices with loops per vertex in [0, max_loops] and
/// arrows per unordered pair in [0, max_pair], one fixed orientation (i -> j
/// for i < j). Deterministic odometer order.
std::vector<Quiver> small_quivers(int nv, int max_loops, int max_pair);

/// Union over 1..max_vertices vertices.
std::vector<Quiver> small_quiver_corpus(int max_vertices, int max_loops, int max_pair);

/// Connected multigraphs (loops allowed) with the given vertex count and at
/// most max_edges edges, one representative per labeled edge multiset.
std::vector<Quiver> connected_multigraphs(int nv, int max_edges);

/// Deterministic stream of property-(P) pairs: totally negative quivers from
/// the small corpus with dimension entries in [1, max_entry]. Pass
/// skip_all_ones to drop d = (1,...,1).
std::vector<std::pair<Quiver, DimVector>> property_p_pairs(int max_vertices, int max_loops,
                                                           int max_pair, Int max_entry,
                                                           std::size_t limit,
                                                           bool skip_all_ones = false);

}  // namespace catalog
}  // namespace tnq
