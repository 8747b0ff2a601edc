#pragma once

#include "tnq/quiver.hpp"

namespace tnq {

/// Reading of the one-arrow (1,1) exception. TwoVertexSupport triggers it only
/// when supp(d) has exactly two vertices; AnyJoinedPair triggers it whenever
/// some support pair joined by exactly one arrow carries dimensions (1,1).
enum class ExceptionPolicy { TwoVertexSupport, AnyJoinedPair };

/// Total negativity plus the exception clause above. d != 0 required.
bool has_property_p(const Quiver& q, const DimVector& d,
                    ExceptionPolicy policy = ExceptionPolicy::TwoVertexSupport);

enum class Tri { yes, no, unknown };

/// Existence of a simple module of dimension d over the preprojective algebra,
/// decided on the cases the combinatorics settles:
///   (a) property (P) holds            -> yes
///   (b) d all-ones on its support     -> two-edge-connectivity of the support
///   (c) d in the fundamental region   -> no iff one of the three exceptional
///       shapes matches (extended Dynkin multiple; one-arrow split with
///       endpoint dimensions 1; the mixed shape), yes otherwise
///   (d) anything else                 -> unknown
/// Disconnected support never carries a simple module.
Tri simple_module_exists(const Quiver& q, const DimVector& d,
                         ExceptionPolicy policy = ExceptionPolicy::TwoVertexSupport);

}  // namespace tnq
