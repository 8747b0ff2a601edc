#include "tnq/simples.hpp"

#include <algorithm>

#include "tnq/dynkin.hpp"
#include "tnq/error.hpp"
#include "tnq/forms.hpp"
#include "tnq/graph_alg.hpp"

namespace tnq {

bool has_property_p(const Quiver& q, const DimVector& d, ExceptionPolicy policy) {
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  if (d.is_zero()) throw Error("zero-dim", "zero dimension vector rejected");
  if (!is_totally_negative(q).totally_negative) return false;
  auto supp = d.support();
  if (policy == ExceptionPolicy::TwoVertexSupport) {
    if (supp.size() != 2) return true;
    int i = supp[0], j = supp[1];
    return !(q.arrows_between(i, j) == 1 && d.v[static_cast<size_t>(i)] == 1 &&
             d.v[static_cast<size_t>(j)] == 1);
  }
  for (size_t a = 0; a < supp.size(); ++a)
    for (size_t b = a + 1; b < supp.size(); ++b) {
      int i = supp[a], j = supp[b];
      if (q.arrows_between(i, j) == 1 && d.v[static_cast<size_t>(i)] == 1 &&
          d.v[static_cast<size_t>(j)] == 1)
        return false;
    }
  return true;
}

namespace {

// Exceptional shapes within the fundamental region, on a sincere connected
// (q, d). Each bridge splits the quiver in two; the split cases inspect the
// endpoint dimensions and the extended Dynkin structure of the halves.
bool exceptional_case_matches(const Quiver& q, const DimVector& d) {
  // shape 1: whole support extended Dynkin, d a multiple m >= 2 of the root
  if (auto delta = extended_dynkin_root(q)) {
    const auto& dl = delta->v;
    Int m = 0;
    bool multiple = true;
    for (size_t i = 0; i < dl.size() && multiple; ++i) {
      if (d.v[i] % dl[i] != 0) {
        multiple = false;
        break;
      }
      Int mi = d.v[i] / dl[i];
      if (m == 0)
        m = mi;
      else if (m != mi)
        multiple = false;
    }
    if (multiple && m >= 2) return true;
  }
  for (int a : bridges(q)) {
    auto [u, w] = q.arrows[static_cast<size_t>(a)];
    // component of u after deleting arrow a
    std::vector<bool> side_u(static_cast<size_t>(q.vcount()), false);
    std::vector<int> stack{u};
    side_u[static_cast<size_t>(u)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < q.acount(); ++e) {
        if (e == a) continue;
        auto [s, t] = q.arrows[static_cast<size_t>(e)];
        int other = -1;
        if (s == v)
          other = t;
        else if (t == v)
          other = s;
        else
          continue;
        if (!side_u[static_cast<size_t>(other)]) {
          side_u[static_cast<size_t>(other)] = true;
          stack.push_back(other);
        }
      }
    }
    // shape 2: both joining vertices have dimension one
    if (d.v[static_cast<size_t>(u)] == 1 && d.v[static_cast<size_t>(w)] == 1) return true;
    // shape 3: dimension one on one side's endpoint, extended Dynkin multiple
    // (m >= 2) on the other side
    auto check_mixed = [&](int one_end, bool dynkin_on_u_side) -> bool {
      if (d.v[static_cast<size_t>(one_end)] != 1) return false;
      std::vector<int> part;
      for (int v = 0; v < q.vcount(); ++v)
        if (side_u[static_cast<size_t>(v)] == dynkin_on_u_side) part.push_back(v);
      Quiver sub = q.restricted(part);
      auto delta = extended_dynkin_root(sub);
      if (!delta) return false;
      DimVector dr = d.restricted(part);
      Int m = 0;
      for (size_t i = 0; i < part.size(); ++i) {
        if (dr.v[i] % delta->v[i] != 0) return false;
        Int mi = dr.v[i] / delta->v[i];
        if (m == 0)
          m = mi;
        else if (m != mi)
          return false;
      }
      return m >= 2;
    };
    if (check_mixed(u, false)) return true;  // u side is dimension one, Dynkin on w side
    if (check_mixed(w, true)) return true;
  }
  return false;
}

}  // namespace

Tri simple_module_exists(const Quiver& q, const DimVector& d, ExceptionPolicy policy) {
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  if (d.is_zero()) throw Error("zero-dim", "zero dimension vector rejected");
  auto supp = d.support();
  if (!support_connected(q, d)) return Tri::no;
  Quiver sub = q.restricted(supp);
  DimVector dr = d.restricted(supp);
  if (has_property_p(sub, dr, policy)) return Tri::yes;
  bool all_ones = std::all_of(dr.v.begin(), dr.v.end(), [](Int x) { return x == 1; });
  if (all_ones) return is_two_edge_connected(sub) ? Tri::yes : Tri::no;
  if (in_fundamental_region(sub, dr))
    return exceptional_case_matches(sub, dr) ? Tri::no : Tri::yes;
  return Tri::unknown;
}

}  // namespace tnq
