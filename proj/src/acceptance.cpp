#include "tnq/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "tnq/bounds.hpp"
#include "tnq/catalog.hpp"
#include "tnq/error.hpp"
#include "tnq/forms.hpp"
#include "tnq/graph_alg.hpp"
#include "tnq/mukai.hpp"
#include "tnq/multiplicative.hpp"
#include "tnq/strata.hpp"

namespace tnq {
namespace accept {

namespace {

using Check = std::function<bool(std::ostringstream&)>;

CriterionResult run_one(int id, const std::string& name, const Options&, const Check& check) {
  CriterionResult res;
  res.id = id;
  res.name = name;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  try {
    res.pass = check(detail);
  } catch (const Error& e) {
    res.pass = false;
    detail << "error[" << e.code() << "]: " << e.what();
  } catch (const std::exception& e) {
    res.pass = false;
    detail << "error: " << e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.detail = detail.str();
  return res;
}

mpz_class qpow(std::uint32_t q, unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), q, e);
  return p;
}

// all dimension vectors with entries in [lo, hi]
std::vector<DimVector> dim_box(int nv, Int lo, Int hi) {
  std::vector<DimVector> out;
  DimVector d = DimVector::zeros(nv);
  std::function<void(int)> rec = [&](int i) {
    if (i == nv) {
      out.push_back(d);
      return;
    }
    for (Int x = lo; x <= hi; ++x) {
      d.v[static_cast<size_t>(i)] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

bool c1_dimension_identities(std::ostringstream& detail, const Options&) {
  auto pairs = catalog::property_p_pairs(3, 3, 3, 3, 50);
  if (pairs.size() != 50) {
    detail << "expected 50 pairs, got " << pairs.size();
    return false;
  }
  for (const auto& [q, d] : pairs) {
    mpz_class dx = bounds::dim_x(q, d);
    mpz_class dm = bounds::dim_m(q, d);
    mpz_class dr = bounds::dim_r_double(q, d);
    if (dm + dr != 2 * dx) {
      detail << "dim identity failed at " << q.canonical_hash() << " d=" << d.to_string();
      return false;
    }
    if (dx != dr - (mpz_class(d.dot(d)) - 1)) {
      detail << "codimension identity failed at " << q.canonical_hash() << " d=" << d.to_string();
      return false;
    }
  }
  detail << "50 property-(P) pairs, both identities exact";
  return true;
}

bool c2_total_negativity(std::ostringstream& detail, const Options&) {
  auto corpus = catalog::small_quiver_corpus(3, 3, 3);
  long positives = 0, negatives = 0;
  for (const auto& q : corpus) {
    auto tn = is_totally_negative(q);
    if (tn.totally_negative) {
      ++positives;
      for (const auto& d : dim_box(q.vcount(), 1, 4))
        for (const auto& e : dim_box(q.vcount(), 1, 4))
          if (sym_form(q, d, e) >= 0) {
            detail << "claimed totally negative but (d,e) >= 0 at " << q.canonical_hash();
            return false;
          }
    } else {
      ++negatives;
      auto [i, j] = *tn.witness;
      DimVector ei = DimVector::unit(q.vcount(), i);
      DimVector ej = DimVector::unit(q.vcount(), j);
      if (sym_form(q, ei, ej) < 0) {
        detail << "witness not certifying at " << q.canonical_hash();
        return false;
      }
    }
  }
  detail << corpus.size() << " quivers (" << positives << " totally negative, " << negatives
         << " witnessed)";
  return true;
}

bool c3_loop_lemma(std::ostringstream& detail, const Options&) {
  long rows = 0;
  for (Int g = 2; g <= 4; ++g)
    for (Int d = 2; d <= 6; ++d) {
      auto rep = bounds::check_loop_lemma(g, d);
      if (!rep.all_margins_nonneg) {
        detail << "negative margin at g=" << g << " d=" << d;
        return false;
      }
      for (size_t r = 0; r < rep.rows.size(); ++r) {
        bool all_ones = true;
        for (Int m : rep.rows[r].composition)
          if (m != 1) all_ones = false;
        bool expect_equality = (g == 2 && all_ones);
        bool is_equality = rep.rows[r].margin == 0;
        if (expect_equality != is_equality) {
          detail << "equality set mismatch at g=" << g << " d=" << d;
          return false;
        }
        ++rows;
      }
    }
  detail << rows << " compositions, margins >= 0, equality exactly at g=2 with unit parts";
  return true;
}

bool c4_totneg_lemma(std::ostringstream& detail, const Options&) {
  std::vector<std::pair<Quiver, DimVector>> pairs;
  auto add_filtered = [&](int nv, size_t quota) {
    auto all = catalog::property_p_pairs(nv, 3, 3, 3, 4000, true);
    size_t taken = 0;
    for (const auto& p : all) {
      if (p.first.vcount() != nv) continue;
      pairs.push_back(p);
      if (++taken >= quota) break;
    }
  };
  add_filtered(1, 4);
  add_filtered(2, 10);
  add_filtered(3, 8);
  if (pairs.size() < 20) {
    detail << "catalog produced only " << pairs.size() << " pairs";
    return false;
  }
  for (const auto& [q, d] : pairs) {
    auto rep = bounds::check_totneg_lemma(q, d);
    if (!rep.verdict) {
      detail << "bound not strict at " << q.canonical_hash() << " d=" << d.to_string()
             << " margin=" << rep.margin.get_str();
      return false;
    }
    if (!rep.remainder_ok) {
      detail << "remainder inequality failed at " << q.canonical_hash() << " d=" << d.to_string();
      return false;
    }
  }
  detail << pairs.size() << " pairs, strict bound and remainder inequality hold";
  return true;
}

bool c5_count_oracles(std::ostringstream& detail, const Options& opts) {
  Quiver a2 = path_quiver(2);
  DimVector ones = dims({1, 1});
  for (std::uint32_t q : {2u, 3u})
    for (std::uint32_t n = 1; n <= 3; ++n) {
      mpz_class expected =
          mpz_class(n + 1) * qpow(q, n) - mpz_class(n) * qpow(q, n - 1);
      for (auto method : {count::Method::Kernel, count::Method::Brute}) {
        count::Options co;
        co.method = method;
        co.threads = opts.threads;
        co.budget = opts.budget;
        co.cache = opts.cache;
        auto rec = count::count_moment_fiber(a2, ones, q, n, co);
        if (rec.count != expected) {
          detail << "q=" << q << " n=" << n << " method=" << count::method_name(method)
                 << " got " << rec.count.get_str() << " want " << expected.get_str();
          return false;
        }
      }
    }
  detail << "counts (n+1)q^n - n q^(n-1) for q in {2,3}, n <= 3, both methods";
  return true;
}

bool c6_smooth_baseline(std::ostringstream& detail, const Options& opts) {
  Quiver s2 = loop_quiver(2);
  DimVector one = dims({1});
  count::Options co;
  co.threads = opts.threads;
  co.budget = opts.budget;
  co.cache = opts.cache;
  for (std::uint32_t q : {2u, 3u}) {
    auto seq = count::normalized_sequence(s2, one, q, 4, co);
    for (const auto& e : seq)
      if (e.normalized != 1) {
        detail << "q=" << q << " n=" << e.n << " normalized " << e.normalized.get_str();
        return false;
      }
  }
  detail << "normalized counts identically 1 for q in {2,3}, n <= 4";
  return true;
}

bool c7_method_agreement(std::ostringstream& detail, const Options& opts) {
  Quiver s2 = loop_quiver(2);
  DimVector two = dims({2});
  count::Options kernel;
  kernel.threads = opts.threads;
  kernel.budget = opts.budget;
  kernel.cache = opts.cache;
  count::Options brute = kernel;
  brute.method = count::Method::Brute;

  auto k1 = count::count_moment_fiber(s2, two, 2, 1, kernel);
  auto b1 = count::count_moment_fiber(s2, two, 2, 1, brute);
  if (k1.count != b1.count) {
    detail << "n=1 kernel " << k1.count.get_str() << " != brute " << b1.count.get_str();
    return false;
  }
  auto chk = count::check_jet_fiber_lemma(s2, two, 2, 3, kernel);  // uses count at n=2
  if (!chk.ok) {
    detail << "jet-fiber consistency at m=3: fiber " << chk.fiber.get_str() << " expected "
           << chk.expected.get_str();
    return false;
  }
  detail << "n=1 agreement over 2^16 points (count " << k1.count.get_str()
         << "), n=2 consistent with the m=3 fiber";
  return true;
}

bool c8_jet_fiber(std::ostringstream& detail, const Options& opts) {
  count::Options co;
  co.threads = opts.threads;
  co.budget = opts.budget;
  co.cache = opts.cache;
  struct Case {
    Quiver q;
    DimVector d;
    std::vector<std::uint32_t> qs;
  };
  std::vector<Case> cases;
  cases.push_back({path_quiver(2), dims({1, 1}), {2, 3}});
  cases.push_back({loop_quiver(2), dims({1}), {2, 3}});
  cases.push_back({loop_quiver(2), dims({2}), {2}});
  long checked = 0;
  for (const auto& c : cases)
    for (std::uint32_t q : c.qs)
      for (std::uint32_t m = 1; m <= 3; ++m) {
        auto chk = count::check_jet_fiber_lemma(c.q, c.d, q, m, co);
        if (!chk.ok) {
          detail << "failed at " << c.q.canonical_hash() << " d=" << c.d.to_string() << " q=" << q
                 << " m=" << m;
          return false;
        }
        ++checked;
      }
  detail << checked << " fiber factorizations exact for m in {1,2,3}";
  return true;
}

bool c9_convergence_signatures(std::ostringstream& detail, const Options& opts) {
  count::Options co;
  co.threads = opts.threads;
  co.budget = opts.budget;
  co.cache = opts.cache;
  Quiver a2 = path_quiver(2);
  auto seq_a2 = count::normalized_sequence(a2, dims({1, 1}), 2, 3, co);
  mpq_class expect_a2[3] = {mpq_class(3, 2), mpq_class(2), mpq_class(5, 2)};
  for (int i = 0; i < 3; ++i)
    if (seq_a2[static_cast<size_t>(i)].normalized != expect_a2[i]) {
      detail << "bridge sequence entry " << (i + 1) << " = "
             << seq_a2[static_cast<size_t>(i)].normalized.get_str();
      return false;
    }
  if (!(seq_a2[0].normalized < seq_a2[1].normalized &&
        seq_a2[1].normalized < seq_a2[2].normalized)) {
    detail << "bridge sequence not strictly increasing";
    return false;
  }

  Quiver tri = cycle_quiver(3);
  auto seq_tri = count::normalized_sequence(tri, dims({1, 1, 1}), 2, 3, co);
  mpq_class d1 = seq_tri[1].normalized - seq_tri[0].normalized;
  mpq_class d2 = seq_tri[2].normalized - seq_tri[1].normalized;
  if (!(d2 < d1)) {
    detail << "bridgeless differences not contracting: " << d1.get_str() << " then "
           << d2.get_str();
    return false;
  }
  // agreement with brute force pins the bridgeless values
  count::Options brute = co;
  brute.method = count::Method::Brute;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    auto b = count::count_moment_fiber(tri, dims({1, 1, 1}), 2, n, brute);
    if (b.count != seq_tri[static_cast<size_t>(n - 1)].count) {
      detail << "bridgeless brute disagreement at n=" << n;
      return false;
    }
  }
  detail << "bridge case strictly increasing (3/2, 2, 5/2); bridgeless case contracting ("
         << seq_tri[0].normalized.get_str() << ", " << seq_tri[1].normalized.get_str() << ", "
         << seq_tri[2].normalized.get_str() << ")";
  return true;
}

bool c10_gloop_crosscheck(std::ostringstream& detail, const Options&) {
  const std::vector<std::vector<Int>> partitions = {
      {1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}, {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  long cases = 0;
  for (Int g : {2, 3})
    for (const auto& m : partitions) {
      // all multiplicity vectors with entries in {1,2}
      std::vector<Int> e(m.size(), 1);
      bool more = true;
      while (more) {
        if (!mukai::cross_check_gloop(g, m, e)) {
          detail << "mismatch at g=" << g << " |m|=" << m.size();
          return false;
        }
        ++cases;
        more = false;
        for (auto& x : e) {
          if (++x <= 2) {
            more = true;
            break;
          }
          x = 1;
        }
      }
    }
  detail << cases << " quiver equalities exact for g in {2,3}, partitions of k <= 4";
  return true;
}

bool c11_multiplicative(std::ostringstream& detail, const Options&) {
  Quiver jordan = loop_quiver(1);
  DimVector one = dims({1});
  for (std::uint32_t q : {2u, 3u, 5u}) {
    mpz_class got = count::count_multiplicative_fiber(jordan, one, q, {1u}, 1);
    mpz_class want = mpz_class(q) * q - q + 1;
    if (got != want) {
      detail << "alpha=1 q=" << q << " got " << got.get_str() << " want " << want.get_str();
      return false;
    }
  }
  for (std::uint32_t q : {3u, 5u}) {  // q=2 has no alpha != 1
    mpz_class got = count::count_multiplicative_fiber(jordan, one, q, {2u}, 1);
    if (got != 0) {
      detail << "alpha=2 q=" << q << " got " << got.get_str();
      return false;
    }
  }
  detail << "q^2-q+1 at alpha=1 for q in {2,3,5}; zero at alpha=2 for q in {3,5}";
  return true;
}

bool c12_stratification(std::ostringstream& detail, const Options&) {
  Quiver s2 = loop_quiver(2);
  long types_total = 0;
  for (Int dv = 1; dv <= 4; ++dv) {
    DimVector d = dims({dv});
    auto types = enumerate_semisimple_types(s2, d, OraclePolicy::Strict);
    types_total += static_cast<long>(types.size());
    SemisimpleType tmin = tau_min(s2, d);
    for (const auto& t : types) {
      if (!types_leq(t, t)) {
        detail << "not reflexive at d=" << dv;
        return false;
      }
      if (!types_leq(tmin, t)) {
        detail << "tau_min not least at d=" << dv;
        return false;
      }
      auto [aq, ad] = aux_quiver(s2, t);
      if (!has_property_p(aq, ad)) {
        detail << "auxiliary pair lost property (P) at d=" << dv;
        return false;
      }
    }
    for (const auto& a : types)
      for (const auto& b : types) {
        bool ab = types_leq(a, b), ba = types_leq(b, a);
        if (ab && ba && !(a == b)) {
          detail << "antisymmetry failed at d=" << dv;
          return false;
        }
        if (ab) {
          Int sa = 0, sb = 0;
          for (const auto& s : a.summands) sa += s.mult * s.mult;
          for (const auto& s : b.summands) sb += s.mult * s.mult;
          if (!(sa >= sb)) {
            detail << "stabilizer monotonicity failed at d=" << dv;
            return false;
          }
        }
        for (const auto& c : types)
          if (ab && types_leq(b, c) && !types_leq(a, c)) {
            detail << "transitivity failed at d=" << dv;
            return false;
          }
      }
  }
  detail << types_total << " types over d <= 4: partial order, least element, stabilizer "
         << "monotonicity, property (P) preserved";
  return true;
}

bool c13_interleaving(std::ostringstream& detail, const Options&) {
  struct Case {
    Quiver q;
    SemisimpleType tau;
  };
  std::vector<Case> cases;
  {
    Quiver s2 = loop_quiver(2);
    SemisimpleType t1;
    t1.summands = {{dims({1}), 3}};
    SemisimpleType t2;
    t2.summands = {{dims({1}), 2}, {dims({2}), 2}};
    SemisimpleType t3;
    t3.summands = {{dims({1}), 2}, {dims({1}), 1}, {dims({2}), 1}};
    cases.push_back({s2, t1});
    cases.push_back({s2, t2});
    cases.push_back({s2, t3});
  }
  {
    Quiver a2 = path_quiver(2);
    SemisimpleType t;
    t.summands = {{dims({1, 0}), 2}, {dims({0, 1}), 2}};
    cases.push_back({a2, t});
  }
  long groups = 0;
  for (const auto& c : cases) {
    std::vector<DimVector> class_dims;
    for (const auto& s : c.tau.summands) class_dims.push_back(s.dim);
    // group top types by their per-class subsequences; each group must share
    // one value of sum m_s z_s
    std::map<std::string, Int> seen;
    for (const auto& top : enumerate_top_types(c.tau)) {
      std::string key;
      for (size_t cls = 1; cls <= c.tau.summands.size(); ++cls) {
        key += "|";
        for (const auto& s : top)
          if (s.cls == static_cast<int>(cls)) key += std::to_string(s.mult) + ",";
      }
      auto z = z_sequence(top, class_dims, c.q);
      Int sum = 0;
      for (size_t s = 0; s < top.size(); ++s) sum += top[s].mult * z[s];
      auto [it, inserted] = seen.emplace(key, sum);
      if (inserted)
        ++groups;
      else if (it->second != sum) {
        detail << "interleaving changed the weighted z sum";
        return false;
      }
    }
  }
  detail << groups << " interleaving classes, weighted z sums invariant";
  return true;
}

}  // namespace

std::vector<CriterionResult> run(const Options& opts) {
  if (opts.level != "desk")
    throw Error("schema", "unknown level: " + opts.level + " (expected: desk)");
  std::vector<CriterionResult> out;
  auto add = [&](int id, const std::string& name,
                 const std::function<bool(std::ostringstream&, const Options&)>& fn) {
    out.push_back(run_one(id, name, opts, [&](std::ostringstream& d) { return fn(d, opts); }));
  };
  add(1, "dimension identities", c1_dimension_identities);
  add(2, "total negativity equivalence", c2_total_negativity);
  add(3, "one-vertex loop bound", c3_loop_lemma);
  add(4, "totally negative bound", c4_totneg_lemma);
  add(5, "point count oracles", c5_count_oracles);
  add(6, "smooth baseline", c6_smooth_baseline);
  add(7, "method agreement at scale", c7_method_agreement);
  add(8, "jet fiber factorization", c8_jet_fiber);
  add(9, "convergence signatures", c9_convergence_signatures);
  add(10, "g-loop cross-check", c10_gloop_crosscheck);
  add(11, "multiplicative counts", c11_multiplicative);
  add(12, "stratification sanity", c12_stratification);
  add(13, "interleaving invariance", c13_interleaving);
  return out;
}

}  // namespace accept
}  // namespace tnq
