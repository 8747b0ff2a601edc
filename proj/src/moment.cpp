#include "tnq/moment.hpp"

#include <map>

#include "tnq/error.hpp"

namespace tnq {

MomentSystem MomentSystem::build(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  MomentSystem sys;
  sys.eqbase.resize(static_cast<size_t>(q.vcount()));
  int off = 0;
  for (int i = 0; i < q.vcount(); ++i) {
    sys.eqbase[static_cast<size_t>(i)] = off;
    off += static_cast<int>(d.v[static_cast<size_t>(i)] * d.v[static_cast<size_t>(i)]);
  }
  sys.neq = off;
  sys.xbase.resize(static_cast<size_t>(q.acount()));
  sys.ybase.resize(static_cast<size_t>(q.acount()));
  int xo = 0;
  for (int a = 0; a < q.acount(); ++a) {
    auto [s, t] = q.arrows[static_cast<size_t>(a)];
    sys.xbase[static_cast<size_t>(a)] = xo;
    sys.ybase[static_cast<size_t>(a)] = xo;  // y blocks mirror x blocks entrywise
    xo += static_cast<int>(d.v[static_cast<size_t>(s)] * d.v[static_cast<size_t>(t)]);
  }
  sys.nx = sys.ny = xo;

  for (int a = 0; a < q.acount(); ++a) {
    auto [s, t] = q.arrows[static_cast<size_t>(a)];
    int ds = static_cast<int>(d.v[static_cast<size_t>(s)]);
    int dt = static_cast<int>(d.v[static_cast<size_t>(t)]);
    // x_a is dt x ds at offset xbase[a] (row-major); y_a is ds x dt
    auto xv = [&](int r, int c) { return sys.xbase[static_cast<size_t>(a)] + r * ds + c; };
    auto yv = [&](int r, int c) { return sys.ybase[static_cast<size_t>(a)] + r * dt + c; };
    // +(x_a y_a)[p][r] at vertex t
    for (int p = 0; p < dt; ++p)
      for (int r = 0; r < dt; ++r)
        for (int k = 0; k < ds; ++k)
          sys.monos.push_back(
              {sys.eqbase[static_cast<size_t>(t)] + p * dt + r, xv(p, k), yv(k, r), +1});
    // -(y_a x_a)[p][r] at vertex s
    for (int p = 0; p < ds; ++p)
      for (int r = 0; r < ds; ++r)
        for (int k = 0; k < dt; ++k)
          sys.monos.push_back(
              {sys.eqbase[static_cast<size_t>(s)] + p * ds + r, xv(k, r), yv(p, k), -1});
  }

  // trace relation: the diagonal equations sum to zero symbolically
  std::map<std::pair<int, int>, int> acc;
  for (const auto& m : sys.monos) {
    // locate the vertex block and check m.eq sits on its diagonal
    int vtx = q.vcount() - 1;
    for (int i = 0; i + 1 < q.vcount(); ++i)
      if (m.eq < sys.eqbase[static_cast<size_t>(i + 1)]) {
        vtx = i;
        break;
      }
    int di = static_cast<int>(d.v[static_cast<size_t>(vtx)]);
    int local = m.eq - sys.eqbase[static_cast<size_t>(vtx)];
    if (di == 0 || local % (di + 1) != 0) continue;  // diagonal entries are 0, di+1, 2(di+1), ...
    acc[{m.xvar, m.yvar}] += m.sign;
  }
  for (const auto& [key, coeff] : acc)
    if (coeff != 0)
      throw Error("precondition", "trace relation violated; moment system construction is wrong");
  return sys;
}

}  // namespace tnq
