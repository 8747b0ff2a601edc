#pragma once

#include <cstdint>
#include <vector>

#include "tnq/quiver.hpp"

namespace tnq {

/// Symbolic description of the moment map: per vertex i the matrix equation
/// sum_{t(a)=i} x_a y_a - sum_{s(a)=i} y_a x_a, flattened to scalar equations
/// as signed bilinear monomials x[xvar]*y[yvar]. The construction verifies the
/// trace relation (the symbolic sum of the traces vanishes identically).
struct MomentSystem {
  struct Mono {
    int eq;
    int xvar;
    int yvar;
    std::int8_t sign;  // +1 or -1
  };

  int nx = 0;   // entries across all x matrices; equals ny
  int ny = 0;   // entries across all y matrices
  int neq = 0;  // sum over vertices of d_i^2
  std::vector<Mono> monos;
  std::vector<int> xbase, ybase, eqbase;  // per arrow / arrow / vertex offsets

  static MomentSystem build(const Quiver& q, const DimVector& d);
};

}  // namespace tnq
