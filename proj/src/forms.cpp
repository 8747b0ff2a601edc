#include "tnq/forms.hpp"

#include "tnq/error.hpp"
#include "tnq/graph_alg.hpp"

namespace tnq {

namespace {

void check_sizes(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (static_cast<int>(d.v.size()) != q.vcount() || static_cast<int>(e.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vectors must be indexed by the quiver's vertices");
}

}  // namespace

Int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  check_sizes(q, d, e);
  Int s = 0;
  for (int i = 0; i < q.vcount(); ++i) s += d.v[static_cast<size_t>(i)] * e.v[static_cast<size_t>(i)];
  for (const auto& [src, tgt] : q.arrows)
    s -= d.v[static_cast<size_t>(src)] * e.v[static_cast<size_t>(tgt)];
  return s;
}

Int sym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) + euler_form(q, e, d);
}

EulerMatrix EulerMatrix::of(const Quiver& q) {
  EulerMatrix m;
  m.n = q.vcount();
  m.e.assign(static_cast<size_t>(m.n), std::vector<Int>(static_cast<size_t>(m.n), 0));
  for (int i = 0; i < m.n; ++i) m.e[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (const auto& [s, t] : q.arrows) m.e[static_cast<size_t>(s)][static_cast<size_t>(t)] -= 1;
  m.c.assign(static_cast<size_t>(m.n), std::vector<Int>(static_cast<size_t>(m.n), 0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      m.c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m.e[static_cast<size_t>(i)][static_cast<size_t>(j)] +
          m.e[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return m;
}

Int EulerMatrix::euler(const DimVector& d, const DimVector& e_) const {
  Int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += d.v[static_cast<size_t>(i)] * e[static_cast<size_t>(i)][static_cast<size_t>(j)] *
           e_.v[static_cast<size_t>(j)];
  return s;
}

Int EulerMatrix::sym(const DimVector& d, const DimVector& e_) const {
  Int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += d.v[static_cast<size_t>(i)] * c[static_cast<size_t>(i)][static_cast<size_t>(j)] *
           e_.v[static_cast<size_t>(j)];
  return s;
}

TotalNegativity is_totally_negative(const Quiver& q) {
  for (int i = 0; i < q.vcount(); ++i)
    if (q.loops(i) < 2) return {false, std::make_pair(i, i)};
  for (int i = 0; i < q.vcount(); ++i)
    for (int j = i + 1; j < q.vcount(); ++j)
      if (q.arrows_between(i, j) == 0) return {false, std::make_pair(i, j)};
  return {true, std::nullopt};
}

namespace {

bool region_test(const Quiver& q, const DimVector& d, bool strict) {
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  if (d.is_zero()) throw Error("zero-dim", "zero dimension vector rejected");
  auto supp = d.support();
  if (!support_connected(q, d)) return false;
  EulerMatrix m = EulerMatrix::of(q);
  for (int i : supp) {
    Int val = 0;
    for (int j = 0; j < q.vcount(); ++j)
      val += d.v[static_cast<size_t>(j)] * m.c[static_cast<size_t>(j)][static_cast<size_t>(i)];
    if (strict ? (val >= 0) : (val > 0)) return false;
  }
  return true;
}

}  // namespace

bool fundamental_domain_contains(const Quiver& q, const DimVector& d) {
  return region_test(q, d, true);
}

bool in_fundamental_region(const Quiver& q, const DimVector& d) {
  return region_test(q, d, false);
}

}  // namespace tnq
