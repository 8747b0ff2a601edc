#include "tnq/graph_alg.hpp"

#include <algorithm>
#include <functional>

#include "tnq/error.hpp"

namespace tnq {

namespace {

// adjacency as (neighbor, arrow index), loops excluded
std::vector<std::vector<std::pair<int, int>>> undirected_adjacency(const Quiver& q) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(q.vcount()));
  for (int a = 0; a < q.acount(); ++a) {
    auto [s, t] = q.arrows[static_cast<size_t>(a)];
    if (s == t) continue;
    adj[static_cast<size_t>(s)].emplace_back(t, a);
    adj[static_cast<size_t>(t)].emplace_back(s, a);
  }
  return adj;
}

bool connected_on(const Quiver& q, const std::vector<int>& verts) {
  if (verts.empty()) return false;
  std::vector<bool> in_set(static_cast<size_t>(q.vcount()), false);
  for (int v : verts) in_set[static_cast<size_t>(v)] = true;
  std::vector<bool> seen(static_cast<size_t>(q.vcount()), false);
  std::vector<int> stack{verts.front()};
  seen[static_cast<size_t>(verts.front())] = true;
  size_t found = 1;
  auto adj = undirected_adjacency(q);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, a] : adj[static_cast<size_t>(v)]) {
      (void)a;
      if (in_set[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++found;
        stack.push_back(w);
      }
    }
  }
  return found == verts.size();
}

}  // namespace

bool is_connected(const Quiver& q) {
  std::vector<int> all(static_cast<size_t>(q.vcount()));
  for (int i = 0; i < q.vcount(); ++i) all[static_cast<size_t>(i)] = i;
  return connected_on(q, all);
}

bool support_connected(const Quiver& q, const DimVector& d) {
  if (d.is_zero()) throw Error("zero-dim", "zero dimension vector rejected");
  return connected_on(q, d.support());
}

std::vector<int> bridges(const Quiver& q) {
  if (!is_connected(q)) throw Error("disconnected", "bridge detection needs a connected quiver");
  auto adj = undirected_adjacency(q);
  int n = q.vcount();
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<int> out;
  int timer = 0;
  // iterative DFS; skips the tree arrow itself, so parallel arrows count as back edges
  std::function<void(int, int)> dfs = [&](int v, int via_arrow) {
    disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
    for (auto [w, a] : adj[static_cast<size_t>(v)]) {
      if (a == via_arrow) continue;
      if (disc[static_cast<size_t>(w)] == -1) {
        dfs(w, a);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
        if (low[static_cast<size_t>(w)] > disc[static_cast<size_t>(v)]) out.push_back(a);
      } else {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
      }
    }
  };
  dfs(0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_edge_connected(const Quiver& q) { return bridges(q).empty(); }

Int b_invariant(const Quiver& q) { return 1 - q.vcount() + q.acount(); }

bool two_connected_via_decompositions(const Quiver& q) {
  int n = q.vcount();
  if (n == 1) return true;  // no partition into >= 2 blocks exists
  Int b_whole = b_invariant(q);
  // restricted growth strings enumerate set partitions exactly once
  std::vector<int> block(static_cast<size_t>(n), 0);
  bool ok = true;
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (!ok) return;
    if (i == n) {
      int r = maxb + 1;
      if (r < 2) return;
      // sum of b over full subquivers on the blocks
      Int sum = 0;
      std::vector<int> vcount(static_cast<size_t>(r), 0), ecount(static_cast<size_t>(r), 0);
      for (int v = 0; v < n; ++v) ++vcount[static_cast<size_t>(block[static_cast<size_t>(v)])];
      for (const auto& [s, t] : q.arrows)
        if (block[static_cast<size_t>(s)] == block[static_cast<size_t>(t)])
          ++ecount[static_cast<size_t>(block[static_cast<size_t>(s)])];
      for (int bidx = 0; bidx < r; ++bidx)
        sum += 1 - vcount[static_cast<size_t>(bidx)] + ecount[static_cast<size_t>(bidx)];
      if (!(b_whole > sum)) ok = false;
      return;
    }
    for (int bnum = 0; bnum <= maxb + 1; ++bnum) {
      block[static_cast<size_t>(i)] = bnum;
      rec(i + 1, std::max(maxb, bnum));
    }
  };
  rec(1, 0);  // vertex 0 pinned to block 0
  return ok;
}

}  // namespace tnq
