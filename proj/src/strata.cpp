#include "tnq/strata.hpp"

#include <algorithm>
#include <functional>

#include "tnq/error.hpp"
#include "tnq/forms.hpp"

namespace tnq {

namespace {

bool summand_less(const Summand& a, const Summand& b) {
  if (a.dim.v != b.dim.v) return a.dim.v < b.dim.v;
  return a.mult < b.mult;
}

}  // namespace

void SemisimpleType::canonicalize() {
  std::sort(summands.begin(), summands.end(), summand_less);
}

DimVector SemisimpleType::ambient(int nvertices) const {
  DimVector d = DimVector::zeros(nvertices);
  for (const auto& s : summands) {
    if (static_cast<int>(s.dim.v.size()) != nvertices)
      throw Error("vertex-mismatch", "summand dimension does not match quiver");
    for (size_t i = 0; i < d.v.size(); ++i) d.v[i] += s.mult * s.dim.v[i];
  }
  return d;
}

nlohmann::ordered_json SemisimpleType::to_json(const Quiver& q) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& s : summands) {
    nlohmann::ordered_json e;
    e["dim"] = s.dim.to_json(q);
    e["mult"] = s.mult;
    j.push_back(e);
  }
  return j;
}

SemisimpleType SemisimpleType::from_json(const Quiver& q, const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw Error("schema", "semisimple type json must be an array");
  SemisimpleType t;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("dim") || !e.contains("mult"))
      throw Error("schema", "type entries need \"dim\" and \"mult\"");
    Summand s;
    s.dim = DimVector::from_json(q, e["dim"]);
    s.mult = e["mult"].get<Int>();
    if (s.mult < 1) throw Error("schema", "multiplicities must be positive");
    if (s.dim.is_zero()) throw Error("schema", "summand dimensions must be nonzero");
    t.summands.push_back(std::move(s));
  }
  t.canonicalize();
  return t;
}

SemisimpleType tau_min(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  if (d.is_zero()) throw Error("zero-dim", "zero dimension vector rejected");
  SemisimpleType t;
  for (int i : d.support())
    t.summands.push_back({DimVector::unit(q.vcount(), i), d.v[static_cast<size_t>(i)]});
  t.canonicalize();
  return t;
}

std::vector<SemisimpleType> enumerate_semisimple_types(const Quiver& q, const DimVector& d,
                                                       OraclePolicy policy, std::size_t cap) {
  if (static_cast<int>(d.v.size()) != q.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  if (d.is_zero()) throw Error("zero-dim", "zero dimension vector rejected");

  // candidate summand dimensions: nonzero delta <= d admitted by the oracle
  std::vector<DimVector> cand;
  DimVector cur = DimVector::zeros(q.vcount());
  std::function<void(int)> gen = [&](int i) {
    if (i == q.vcount()) {
      if (cur.is_zero()) return;
      Tri t = simple_module_exists(q, cur);
      bool admit = (t == Tri::yes) || (policy == OraclePolicy::Permissive && t == Tri::unknown);
      if (admit) cand.push_back(cur);
      return;
    }
    for (Int x = 0; x <= d.v[static_cast<size_t>(i)]; ++x) {
      cur.v[static_cast<size_t>(i)] = x;
      gen(i + 1);
    }
    cur.v[static_cast<size_t>(i)] = 0;
  };
  gen(0);
  std::sort(cand.begin(), cand.end(), [](const DimVector& a, const DimVector& b) { return a.v < b.v; });

  // candidate (dim, mult) pairs in canonical order
  std::vector<Summand> pairs;
  for (const auto& delta : cand) {
    Int mmax = 0;
    for (int i : delta.support()) {
      Int cap_i = d.v[static_cast<size_t>(i)] / delta.v[static_cast<size_t>(i)];
      mmax = (mmax == 0) ? cap_i : std::min(mmax, cap_i);
    }
    for (Int m = 1; m <= mmax; ++m) pairs.push_back({delta, m});
  }
  std::sort(pairs.begin(), pairs.end(), summand_less);

  std::vector<SemisimpleType> out;
  std::vector<Summand> chosen;
  DimVector rem = d;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (rem.is_zero()) {
      if (out.size() >= cap)
        throw Error("cap-exceeded", "semisimple type enumeration exceeded cap");
      SemisimpleType t;
      t.summands = chosen;
      out.push_back(std::move(t));
      return;
    }
    for (size_t p = from; p < pairs.size(); ++p) {
      const auto& [delta, m] = pairs[p];
      bool fits = true;
      for (size_t i = 0; i < rem.v.size(); ++i)
        if (m * delta.v[i] > rem.v[i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (size_t i = 0; i < rem.v.size(); ++i) rem.v[i] -= m * delta.v[i];
      chosen.push_back(pairs[p]);
      rec(p);  // non-decreasing sequences yield each multiset once
      chosen.pop_back();
      for (size_t i = 0; i < rem.v.size(); ++i) rem.v[i] += m * delta.v[i];
    }
  };
  rec(0);
  return out;
}

std::pair<Quiver, DimVector> aux_quiver(const Quiver& q, const SemisimpleType& tau) {
  int r = tau.classes();
  if (r == 0) throw Error("schema", "empty semisimple type");
  Quiver out;
  for (int i = 1; i <= r; ++i) out.vertex_ids.push_back(std::to_string(i));
  DimVector e = DimVector::zeros(r);
  for (int i = 0; i < r; ++i) {
    const auto& si = tau.summands[static_cast<size_t>(i)];
    e.v[static_cast<size_t>(i)] = si.mult;
    Int nloops = 1 - euler_form(q, si.dim, si.dim);
    if (nloops < 0)
      throw Error("negative-arrow-count",
                  "auxiliary loop count negative at class " + std::to_string(i + 1));
    for (Int k = 0; k < nloops; ++k) out.arrows.emplace_back(i, i);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Int arrows = -sym_form(q, tau.summands[static_cast<size_t>(i)].dim,
                             tau.summands[static_cast<size_t>(j)].dim);
      if (arrows < 0)
        throw Error("negative-arrow-count", "auxiliary arrow count negative between classes " +
                                                std::to_string(i + 1) + "," + std::to_string(j + 1));
      for (Int k = 0; k < arrows; ++k) out.arrows.emplace_back(i, j);
    }
  return {std::move(out), std::move(e)};
}

bool types_leq(const SemisimpleType& tau_prime, const SemisimpleType& tau) {
  int rows = tau.classes();        // simples of tau, dimensions d_i, mults e_i
  int cols = tau_prime.classes();  // simples of tau_prime, dimensions d'_j, mults e'_j
  if (rows == 0 || cols == 0) throw Error("schema", "empty semisimple type");
  size_t nv = tau.summands.front().dim.v.size();
  DimVector amb_l = tau_prime.ambient(static_cast<int>(nv));
  DimVector amb_r = tau.ambient(static_cast<int>(nv));
  if (!(amb_l == amb_r)) throw Error("ambient-mismatch", "types refine different dimensions");

  std::vector<Int> colsum(static_cast<size_t>(cols), 0);
  std::vector<Int> row(static_cast<size_t>(cols), 0);

  std::function<bool(int)> fill_rows = [&](int i) -> bool {
    if (i == rows) {
      for (int j = 0; j < cols; ++j)
        if (colsum[static_cast<size_t>(j)] != tau_prime.summands[static_cast<size_t>(j)].mult)
          return false;
      return true;
    }
    const auto& di = tau.summands[static_cast<size_t>(i)];
    DimVector rem = di.dim;
    std::function<bool(int)> fill_cols = [&](int j) -> bool {
      if (j == cols) {
        if (!rem.is_zero()) return false;
        return fill_rows(i + 1);
      }
      const auto& dj = tau_prime.summands[static_cast<size_t>(j)];
      Int bound = 0;
      {
        bool first = true;
        for (int v : dj.dim.support()) {
          Int b = rem.v[static_cast<size_t>(v)] / dj.dim.v[static_cast<size_t>(v)];
          bound = first ? b : std::min(bound, b);
          first = false;
        }
      }
      Int slack = tau_prime.summands[static_cast<size_t>(j)].mult - colsum[static_cast<size_t>(j)];
      Int cmax = std::min(bound, slack / di.mult);
      for (Int c = 0; c <= cmax; ++c) {
        if (c > 0) {
          for (size_t v = 0; v < rem.v.size(); ++v) rem.v[v] -= dj.dim.v[v];
          colsum[static_cast<size_t>(j)] += di.mult;
        }
        if (fill_cols(j + 1)) return true;
      }
      // restore
      for (Int c = cmax; c >= 1; --c) {
        for (size_t v = 0; v < rem.v.size(); ++v) rem.v[v] += dj.dim.v[v];
        colsum[static_cast<size_t>(j)] -= di.mult;
      }
      return false;
    };
    return fill_cols(0);
  };
  return fill_rows(0);
}

nlohmann::ordered_json top_type_to_json(const TopType& t) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& s : t) j.push_back(nlohmann::ordered_json::array({s.cls, s.mult}));
  return j;
}

std::vector<TopType> enumerate_top_types(const SemisimpleType& tau, std::size_t cap) {
  int r = tau.classes();
  std::vector<Int> rem(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) rem[static_cast<size_t>(i)] = tau.summands[static_cast<size_t>(i)].mult;
  std::vector<TopType> out;
  TopType cur;
  std::function<void()> rec = [&]() {
    bool done = std::all_of(rem.begin(), rem.end(), [](Int x) { return x == 0; });
    if (done) {
      if (out.size() >= cap) throw Error("cap-exceeded", "top type enumeration exceeded cap");
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < r; ++i) {
      for (Int m = 1; m <= rem[static_cast<size_t>(i)]; ++m) {
        rem[static_cast<size_t>(i)] -= m;
        cur.push_back({i + 1, m});
        rec();
        cur.pop_back();
        rem[static_cast<size_t>(i)] += m;
      }
    }
  };
  rec();
  return out;
}

std::vector<Int> z_sequence(const TopType& top, const std::vector<DimVector>& class_dims,
                            const Quiver& q) {
  std::vector<Int> z;
  z.reserve(top.size());
  for (size_t s = 0; s < top.size(); ++s) {
    int cls = top[s].cls;
    if (cls < 1 || static_cast<size_t>(cls) > class_dims.size())
      throw Error("schema", "top type class index out of range");
    const DimVector& nd = class_dims[static_cast<size_t>(cls - 1)];
    if (euler_form(q, nd, nd) == 1) {
      z.push_back(0);
      continue;
    }
    Int zl = 0;
    for (size_t t = 0; t < s; ++t)
      if (top[t].cls == cls) zl = top[t].mult;  // latest previous occurrence wins
    z.push_back(zl);
  }
  return z;
}

}  // namespace tnq
