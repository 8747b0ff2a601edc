#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tnq/quiver.hpp"

namespace tnq {

/// <d,e> = sum_i d_i e_i - sum_{a} d_{s(a)} e_{t(a)}.
Int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// (d,e) = <d,e> + <e,d>.
Int sym_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// E[i][j] = delta_ij - #arrows(i->j); C = E + E^T has diagonal 2 - 2*loops(i).
struct EulerMatrix {
  int n = 0;
  std::vector<std::vector<Int>> e;
  std::vector<std::vector<Int>> c;

  static EulerMatrix of(const Quiver& q);
  Int euler(const DimVector& d, const DimVector& e_) const;
  Int sym(const DimVector& d, const DimVector& e_) const;
};

struct TotalNegativity {
  bool totally_negative = false;
  // On failure, unit vectors (i,j) with (eps_i, eps_j) >= 0; i == j allowed.
  std::optional<std::pair<int, int>> witness;
};

/// Structural test: >= 2 loops everywhere and every vertex pair joined.
TotalNegativity is_totally_negative(const Quiver& q);

/// (d, eps_i) < 0 on supp(d), and supp(d) connected. d != 0 required.
bool fundamental_domain_contains(const Quiver& q, const DimVector& d);

/// Non-strict variant (<= 0 on supp, connected support); the region in which
/// the simple-existence case analysis applies.
bool in_fundamental_region(const Quiver& q, const DimVector& d);

}  // namespace tnq
