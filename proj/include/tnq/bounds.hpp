#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tnq/quiver.hpp"
#include "tnq/strata.hpp"

namespace tnq {
namespace bounds {

// Dimension formulas for the zero fiber of the moment map, its quotient and
// the doubled representation space. They carry their usual meaning when
// (Q, d) has property (P); dims_valid reports that flag, the values are
// computed unconditionally.
mpz_class dim_x(const Quiver& q, const DimVector& d);
mpz_class dim_m(const Quiver& q, const DimVector& d);
mpz_class dim_r_double(const Quiver& q, const DimVector& d);
bool dims_valid(const Quiver& q, const DimVector& d);

/// d.d - 1 + (1 - <d,d>) + sum_s m_s z_s - sum_s m_s^2 (1 - <N_{j_s},N_{j_s}>).
mpz_class cb_bound(const Quiver& q, const std::vector<DimVector>& class_dims, const TopType& top,
                   const DimVector& d);

struct LoopLemmaRow {
  std::vector<Int> composition;
  mpz_class lhs;     // bound gap before subtracting d-1
  mpz_class margin;  // lhs - (d-1)
};

struct LoopLemmaReport {
  Int g = 0;
  Int d = 0;
  std::vector<LoopLemmaRow> rows;
  bool all_margins_nonneg = true;
  std::vector<std::size_t> equality_rows;  // indices with margin == 0
};

/// One-vertex bound check over every composition of d, g >= 2, d >= 2.
LoopLemmaReport check_loop_lemma(Int g, Int d);

struct BoundReport {
  std::string quiver_hash;
  DimVector d;
  SemisimpleType tau;
  std::vector<std::pair<TopType, mpz_class>> values;  // exhaustive over top types
  mpz_class max_bound;
  mpz_class threshold;
  mpz_class margin;  // threshold - max_bound
  bool verdict = false;
  // remainder inequality of the splitting argument
  mpz_class remainder_lhs;
  mpz_class remainder_rhs;
  bool remainder_ok = false;

  nlohmann::ordered_json to_json(const Quiver& q) const;
};

/// Maximizes cb_bound over all top types at tau_min and compares against
/// 2(1 - <d,d> - #loops). Requires property (P) and d not all-ones on its
/// support; restricts to the support first.
BoundReport check_totneg_lemma(const Quiver& q, const DimVector& d);

struct LedgerRow {
  long m = 0;
  mpz_class identity_lhs;  // dim_m + dim_r_double
  mpz_class identity_rhs;  // 2 dim_x
  bool identity_equal = false;
  mpz_class step_lhs;  // dim_m + dim_r_double + (m-1) dim_x
  mpz_class step_rhs;  // (m+1) dim_x
  bool step_ok = false;
};

struct Ledger {
  std::vector<LedgerRow> rows;
  bool all_ok = true;
};

/// The jet-dimension bookkeeping behind the inductive argument, checked for
/// 1 <= m <= m_max. Requires property (P).
Ledger mustata_ledger(const Quiver& q, const DimVector& d, long m_max);

}  // namespace bounds
}  // namespace tnq
