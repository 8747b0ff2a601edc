#include "tnq/bounds.hpp"

#include <functional>

#include "tnq/error.hpp"
#include "tnq/forms.hpp"

namespace tnq {
namespace bounds {

namespace {

void check_nonzero(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  if (d.is_zero()) throw Error("zero-dim", "zero dimension vector rejected");
}

}  // namespace

mpz_class dim_x(const Quiver& q, const DimVector& d) {
  check_nonzero(q, d);
  mpz_class dd = d.dot(d);
  mpz_class ef = euler_form(q, d, d);
  return dd - 1 + 2 * (1 - ef);
}

mpz_class dim_m(const Quiver& q, const DimVector& d) {
  check_nonzero(q, d);
  mpz_class ef = euler_form(q, d, d);
  return 2 * (1 - ef);
}

mpz_class dim_r_double(const Quiver& q, const DimVector& d) {
  check_nonzero(q, d);
  mpz_class s = 0;
  for (const auto& [src, tgt] : q.arrows)
    s += mpz_class(d.v[static_cast<size_t>(src)]) * d.v[static_cast<size_t>(tgt)];
  return 2 * s;
}

bool dims_valid(const Quiver& q, const DimVector& d) { return has_property_p(q, d); }

mpz_class cb_bound(const Quiver& q, const std::vector<DimVector>& class_dims, const TopType& top,
                   const DimVector& d) {
  check_nonzero(q, d);
  DimVector total = DimVector::zeros(q.vcount());
  for (const auto& s : top) {
    if (s.cls < 1 || static_cast<size_t>(s.cls) > class_dims.size())
      throw Error("schema", "top type class index out of range");
    const DimVector& nd = class_dims[static_cast<size_t>(s.cls - 1)];
    for (size_t i = 0; i < total.v.size(); ++i) total.v[i] += s.mult * nd.v[i];
  }
  if (!(total == d)) throw Error("ambient-mismatch", "top type does not refine d");

  auto z = z_sequence(top, class_dims, q);
  mpz_class dd = d.dot(d);
  mpz_class ef = euler_form(q, d, d);
  mpz_class acc = dd - 1 + (1 - ef);
  for (size_t s = 0; s < top.size(); ++s) {
    const DimVector& nd = class_dims[static_cast<size_t>(top[s].cls - 1)];
    mpz_class m = top[s].mult;
    acc += m * z[s];
    acc -= m * m * (1 - mpz_class(euler_form(q, nd, nd)));
  }
  return acc;
}

LoopLemmaReport check_loop_lemma(Int g, Int d) {
  if (g < 2 || d < 2) throw Error("precondition", "loop lemma needs g >= 2 and d >= 2");
  LoopLemmaReport rep;
  rep.g = g;
  rep.d = d;
  mpz_class dd = mpz_class(d) * d;
  mpz_class euler_dd = (1 - mpz_class(g)) * dd;  // <d,d> on the g-loop quiver

  std::vector<Int> comp;
  std::function<void(Int)> rec = [&](Int rem) {
    if (rem == 0) {
      mpz_class cross = 0, squares = 0;
      for (size_t s = 0; s < comp.size(); ++s) {
        squares += mpz_class(comp[s]) * comp[s];
        if (s > 0) cross += mpz_class(comp[s]) * comp[s - 1];
      }
      mpz_class bound = dd - 1 + (1 - euler_dd) + cross - mpz_class(g) * squares;
      mpz_class lhs = 2 * (1 - euler_dd - mpz_class(g)) - bound;
      LoopLemmaRow row;
      row.composition = comp;
      row.lhs = lhs;
      row.margin = lhs - (d - 1);
      if (row.margin < 0) rep.all_margins_nonneg = false;
      if (row.margin == 0) rep.equality_rows.push_back(rep.rows.size());
      rep.rows.push_back(std::move(row));
      return;
    }
    for (Int m = 1; m <= rem; ++m) {
      comp.push_back(m);
      rec(rem - m);
      comp.pop_back();
    }
  };
  rec(d);
  return rep;
}

nlohmann::ordered_json BoundReport::to_json(const Quiver& q) const {
  nlohmann::ordered_json j;
  j["quiver_hash"] = quiver_hash;
  j["dim"] = d.to_json(q);
  j["type"] = tau.to_json(q);
  j["top_types"] = nlohmann::ordered_json::array();
  for (const auto& [tt, val] : values) {
    nlohmann::ordered_json row;
    row["top"] = top_type_to_json(tt);
    row["bound"] = val.get_str();
    j["top_types"].push_back(row);
  }
  j["max_bound"] = max_bound.get_str();
  j["threshold"] = threshold.get_str();
  j["margin"] = margin.get_str();
  j["verdict"] = verdict;
  j["remainder_lhs"] = remainder_lhs.get_str();
  j["remainder_rhs"] = remainder_rhs.get_str();
  j["remainder_ok"] = remainder_ok;
  return j;
}

BoundReport check_totneg_lemma(const Quiver& q_in, const DimVector& d_in) {
  check_nonzero(q_in, d_in);
  if (!has_property_p(q_in, d_in))
    throw Error("precondition", "bound check needs property (P)");
  auto supp = d_in.support();
  Quiver q = q_in.restricted(supp);
  DimVector d = d_in.restricted(supp);
  bool all_ones = true;
  for (Int x : d.v)
    if (x != 1) all_ones = false;
  if (all_ones)
    throw Error("precondition", "all-ones dimension vectors are excluded from this bound");

  BoundReport rep;
  rep.quiver_hash = q.canonical_hash();
  rep.d = d;
  rep.tau = tau_min(q, d);

  std::vector<DimVector> class_dims;
  for (const auto& s : rep.tau.summands) class_dims.push_back(s.dim);

  Int total_loops = 0;
  for (int i = 0; i < q.vcount(); ++i) total_loops += q.loops(i);
  rep.threshold = 2 * (1 - mpz_class(euler_form(q, d, d)) - total_loops);

  bool first = true;
  for (const auto& top : enumerate_top_types(rep.tau)) {
    mpz_class val = cb_bound(q, class_dims, top, d);
    if (first || val > rep.max_bound) rep.max_bound = val;
    first = false;
    rep.values.emplace_back(top, val);
  }
  rep.margin = rep.threshold - rep.max_bound;
  rep.verdict = rep.margin > 0;

  // splitting remainder: sum over unordered pairs of r_ij d_i d_j, minus
  // 2(r-1), against the count of dimension-one / dimension->=2 vertices
  int r = q.vcount();
  Int r1 = 0, r2 = 0;
  for (Int x : d.v) (x == 1 ? r1 : r2)++;
  mpz_class lhs = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      lhs += mpz_class(q.arrows_between(i, j)) * d.v[static_cast<size_t>(i)] *
             d.v[static_cast<size_t>(j)];
  lhs -= 2 * (r - 1);
  mpz_class rhs = 2 * mpz_class(r2 - 1) * (r - 1) + mpz_class(r1) * (r1 - 1) / 2;
  rep.remainder_lhs = lhs;
  rep.remainder_rhs = rhs;
  rep.remainder_ok = lhs >= rhs;
  return rep;
}

Ledger mustata_ledger(const Quiver& q, const DimVector& d, long m_max) {
  check_nonzero(q, d);
  if (!has_property_p(q, d)) throw Error("precondition", "ledger needs property (P)");
  Ledger ledger;
  mpz_class dx = dim_x(q, d), dm = dim_m(q, d), dr = dim_r_double(q, d);
  for (long m = 1; m <= m_max; ++m) {
    LedgerRow row;
    row.m = m;
    row.identity_lhs = dm + dr;
    row.identity_rhs = 2 * dx;
    row.identity_equal = row.identity_lhs == row.identity_rhs;
    row.step_lhs = dm + dr + (m - 1) * dx;
    row.step_rhs = (m + 1) * dx;
    row.step_ok = row.step_lhs <= row.step_rhs;
    if (!row.identity_equal || !row.step_ok) ledger.all_ok = false;
    ledger.rows.push_back(std::move(row));
  }
  return ledger;
}

}  // namespace bounds
}  // namespace tnq
