#include "tnq/catalog.hpp"

#include <functional>

#include "tnq/forms.hpp"
#include "tnq/graph_alg.hpp"
#include "tnq/simples.hpp"

namespace tnq {
namespace catalog {

std::vector<Quiver> small_quivers(int nv, int max_loops, int max_pair) {
  int npairs = nv * (nv - 1) / 2;
  std::vector<int> loops(static_cast<size_t>(nv), 0);
  std::vector<int> pair_counts(static_cast<size_t>(npairs), 0);
  std::vector<Quiver> out;
  std::function<void(int)> gen_pairs = [&](int p) {
    if (p == npairs) {
      std::vector<std::vector<int>> between(static_cast<size_t>(nv),
                                            std::vector<int>(static_cast<size_t>(nv), 0));
      int idx = 0;
      for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
          between[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              pair_counts[static_cast<size_t>(idx++)];
      out.push_back(quiver_from_counts(loops, between));
      return;
    }
    for (int c = 0; c <= max_pair; ++c) {
      pair_counts[static_cast<size_t>(p)] = c;
      gen_pairs(p + 1);
    }
  };
  std::function<void(int)> gen_loops = [&](int v) {
    if (v == nv) {
      gen_pairs(0);
      return;
    }
    for (int c = 0; c <= max_loops; ++c) {
      loops[static_cast<size_t>(v)] = c;
      gen_loops(v + 1);
    }
  };
  gen_loops(0);
  return out;
}

std::vector<Quiver> small_quiver_corpus(int max_vertices, int max_loops, int max_pair) {
  std::vector<Quiver> out;
  for (int nv = 1; nv <= max_vertices; ++nv) {
    auto qs = small_quivers(nv, max_loops, max_pair);
    out.insert(out.end(), qs.begin(), qs.end());
  }
  return out;
}

std::vector<Quiver> connected_multigraphs(int nv, int max_edges) {
  int npairs = nv * (nv - 1) / 2;
  int nslots = nv + npairs;  // loops first, then pairs
  std::vector<int> mult(static_cast<size_t>(nslots), 0);
  std::vector<Quiver> out;
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == nslots) {
      std::vector<int> loops(mult.begin(), mult.begin() + nv);
      std::vector<std::vector<int>> between(static_cast<size_t>(nv),
                                            std::vector<int>(static_cast<size_t>(nv), 0));
      int idx = nv;
      for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
          between[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              mult[static_cast<size_t>(idx++)];
      Quiver q = quiver_from_counts(loops, between);
      if (is_connected(q)) out.push_back(std::move(q));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      mult[static_cast<size_t>(slot)] = c;
      rec(slot + 1, left - c);
    }
  };
  rec(0, max_edges);
  return out;
}

std::vector<std::pair<Quiver, DimVector>> property_p_pairs(int max_vertices, int max_loops,
                                                           int max_pair, Int max_entry,
                                                           std::size_t limit,
                                                           bool skip_all_ones) {
  std::vector<std::pair<Quiver, DimVector>> out;
  for (const Quiver& q : small_quiver_corpus(max_vertices, max_loops, max_pair)) {
    if (out.size() >= limit) break;
    if (!is_totally_negative(q).totally_negative) continue;
    // dimension odometer, entries 1..max_entry
    std::vector<Int> entries(static_cast<size_t>(q.vcount()), 1);
    bool more = true;
    while (more && out.size() < limit) {
      DimVector d{entries};
      bool all_ones = d.total() == q.vcount();
      if (!(skip_all_ones && all_ones) && has_property_p(q, d)) out.emplace_back(q, d);
      // bump
      more = false;
      for (auto& e : entries) {
        if (++e <= max_entry) {
          more = true;
          break;
        }
        e = 1;
      }
    }
  }
  return out;
}

}  // namespace catalog
}  // namespace tnq
