#include "tnq/counting.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <thread>

#include "tnq/bounds.hpp"
#include "tnq/error.hpp"
#include "tnq/ringmat.hpp"

namespace tnq {
namespace count {

const char* method_name(Method m) { return m == Method::Kernel ? "kernel" : "brute"; }

Cache::Cache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    entries_[line.substr(0, tab)] = line.substr(tab + 1);
  }
}

std::optional<mpz_class> Cache::get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return mpz_class(it->second);
}

void Cache::put(const std::string& key, const mpz_class& value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = entries_.emplace(key, value.get_str());
  if (!inserted) return;
  std::ofstream out(path_, std::ios::app);
  out << key << '\t' << value.get_str() << '\n';
}

namespace {

std::string dim_key(const DimVector& d) {
  std::string s;
  for (size_t i = 0; i < d.v.size(); ++i) s += (i ? "," : "") + std::to_string(d.v[i]);
  return s;
}

std::string cache_key(const char* kind, const std::string& hash, const DimVector& d,
                      std::uint32_t q, std::uint32_t n, Method method) {
  return std::string(kind) + "|" + hash + "|d=" + dim_key(d) + "|q=" + std::to_string(q) +
         "|n=" + std::to_string(n) + "|" + method_name(method);
}

mpz_class pow_mpz(std::uint32_t q, unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), q, e);
  return p;
}

// q^(digits) as u64-checked enumeration size against the budget
unsigned long long enum_size(std::uint32_t q, int ndigits, unsigned long long budget) {
  mpz_class total = pow_mpz(q, static_cast<unsigned long>(ndigits));
  if (total > mpz_class(budget))
    throw Error("budget-exceeded", "enumeration of " + total.get_str() +
                                       " points exceeds budget " + std::to_string(budget));
  return total.get_ui();
}

void decode_digits(unsigned long long idx, std::uint32_t q, std::vector<std::uint32_t>& digits) {
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
}

inline void bump_digits(std::vector<std::uint32_t>& digits, std::uint32_t q) {
  for (auto& d : digits) {
    if (++d == q) {
      d = 0;
    } else {
      break;
    }
  }
}

mpz_class parallel_sum(unsigned long long total, int threads,
                       const std::function<mpz_class(unsigned long long, unsigned long long)>& body) {
  if (threads < 1) threads = 1;
  unsigned long long nthreads = std::min<unsigned long long>(static_cast<unsigned long long>(threads),
                                                             total ? total : 1);
  if (nthreads <= 1) return body(0, total);
  std::vector<mpz_class> partial(nthreads);
  std::vector<std::thread> pool;
  unsigned long long chunk = total / nthreads;
  for (unsigned long long t = 0; t < nthreads; ++t) {
    unsigned long long b = t * chunk;
    unsigned long long e = (t + 1 == nthreads) ? total : (t + 1) * chunk;
    pool.emplace_back([&, b, e, t]() { partial[t] = body(b, e); });
  }
  for (auto& th : pool) th.join();
  mpz_class acc = 0;
  for (const auto& p : partial) acc += p;
  return acc;
}

// exact power sums: q^k accumulated in u128 when the largest power fits u64,
// mpz otherwise
struct PowAccumulator {
  std::vector<unsigned long long> fast;
  std::vector<mpz_class> slow;
  bool use_fast = false;
  unsigned __int128 acc128 = 0;
  mpz_class acc;

  PowAccumulator(std::uint32_t q, long max_exp) {
    mpz_class top = pow_mpz(q, static_cast<unsigned long>(max_exp));
    use_fast = top.fits_ulong_p();
    if (use_fast) {
      unsigned long long p = 1;
      for (long e = 0; e <= max_exp; ++e) {
        fast.push_back(p);
        if (e < max_exp) p *= q;
      }
    } else {
      for (long e = 0; e <= max_exp; ++e) slow.push_back(pow_mpz(q, static_cast<unsigned long>(e)));
    }
  }
  inline void add(long k) {
    if (use_fast)
      acc128 += fast[static_cast<size_t>(k)];
    else
      acc += slow[static_cast<size_t>(k)];
  }
  mpz_class take() {
    if (!use_fast) return acc;
    mpz_class out;
    unsigned __int128 v = acc128;
    unsigned long long hi = static_cast<unsigned long long>(v >> 64);
    unsigned long long lo = static_cast<unsigned long long>(v);
    out = mpz_class(hi);
    out <<= 64;
    out += mpz_class(lo);
    return out;
  }
};

// ---- kernel-method moment fiber -------------------------------------------

mpz_class kernel_moment_count(const MomentSystem& sys, std::uint32_t q, std::uint32_t n,
                              const Options& opts) {
  int ndigits = sys.nx * static_cast<int>(n);
  unsigned long long total = enum_size(q, ndigits, opts.budget);
  auto body = [&](unsigned long long begin, unsigned long long end) -> mpz_class {
    std::vector<std::uint32_t> digits(static_cast<size_t>(ndigits));
    decode_digits(begin, q, digits);
    std::vector<std::uint32_t> amat(static_cast<size_t>(sys.neq) * sys.ny * n);
    PowAccumulator acc(q, static_cast<long>(n) * sys.ny);
    for (unsigned long long idx = begin; idx < end; ++idx) {
      std::fill(amat.begin(), amat.end(), 0u);
      for (const auto& mo : sys.monos) {
        std::uint32_t* cell = amat.data() + (static_cast<size_t>(mo.eq) * sys.ny + mo.yvar) * n;
        const std::uint32_t* xd = digits.data() + static_cast<size_t>(mo.xvar) * n;
        if (mo.sign > 0)
          for (std::uint32_t k = 0; k < n; ++k) cell[k] = (cell[k] + xd[k]) % q;
        else
          for (std::uint32_t k = 0; k < n; ++k) cell[k] = (cell[k] + q - xd[k]) % q;
      }
      long k = kernel_exponent_inplace(amat.data(), sys.neq, sys.ny, q, n);
      acc.add(k);
      bump_digits(digits, q);
    }
    return acc.take();
  };
  return parallel_sum(total, opts.threads, body);
}

// ---- brute-force moment fiber ---------------------------------------------

mpz_class brute_moment_count(const MomentSystem& sys_in, std::uint32_t q, std::uint32_t n,
                             const Options& opts) {
  int ndigits = (sys_in.nx + sys_in.ny) * static_cast<int>(n);
  unsigned long long total = enum_size(q, ndigits, opts.budget);
  // monos arrive in construction order; regroup by equation for early exits
  MomentSystem sys = sys_in;
  std::stable_sort(sys.monos.begin(), sys.monos.end(),
                   [](const MomentSystem::Mono& a, const MomentSystem::Mono& b) { return a.eq < b.eq; });
  auto body = [&](unsigned long long begin, unsigned long long end) -> mpz_class {
    std::vector<std::uint32_t> digits(static_cast<size_t>(ndigits));
    decode_digits(begin, q, digits);
    std::vector<long long> eqacc(n);
    mpz_class found = 0;
    for (unsigned long long idx = begin; idx < end; ++idx) {
      bool zero = true;
      size_t at = 0;
      while (zero && at < sys.monos.size()) {
        int eq = sys.monos[at].eq;
        std::fill(eqacc.begin(), eqacc.end(), 0ll);
        while (at < sys.monos.size() && sys.monos[at].eq == eq) {
          const auto& mo = sys.monos[at];
          const std::uint32_t* xd = digits.data() + static_cast<size_t>(mo.xvar) * n;
          const std::uint32_t* yd = digits.data() + (static_cast<size_t>(sys.nx) + mo.yvar) * n;
          for (std::uint32_t k1 = 0; k1 < n; ++k1) {
            if (!xd[k1]) continue;
            for (std::uint32_t k2 = 0; k1 + k2 < n; ++k2)
              eqacc[k1 + k2] += static_cast<long long>(mo.sign) * xd[k1] * yd[k2];
          }
          ++at;
        }
        for (std::uint32_t k = 0; k < n; ++k)
          if (eqacc[k] % q != 0) {
            zero = false;
            break;
          }
      }
      if (zero) ++found;
      bump_digits(digits, q);
    }
    return found;
  };
  return parallel_sum(total, opts.threads, body);
}

mpq_class normalize(const mpz_class& cnt, const Quiver& q, const DimVector& d, std::uint32_t qprime,
                    std::uint32_t n) {
  mpz_class dx = bounds::dim_x(q, d);
  mpz_class e = mpz_class(static_cast<long>(n)) * dx;
  mpq_class out;
  if (e >= 0) {
    out = mpq_class(cnt, pow_mpz(qprime, e.get_ui()));
  } else {
    mpz_class neg = -e;
    out = mpq_class(cnt * pow_mpz(qprime, neg.get_ui()), 1);
  }
  out.canonicalize();
  return out;
}

}  // namespace

Record count_moment_fiber(const Quiver& qv, const DimVector& d, std::uint32_t qprime,
                          std::uint32_t n, const Options& opts) {
  RingSpec spec{qprime, n};
  spec.validate();
  if (static_cast<int>(d.v.size()) != qv.vcount())
    throw Error("vertex-mismatch", "dimension vector does not match quiver");
  auto t0 = std::chrono::steady_clock::now();
  Record rec;
  rec.quiver_hash = qv.canonical_hash();
  rec.d = d;
  rec.q = qprime;
  rec.n = n;
  rec.method = opts.method;

  std::string key = cache_key("moment", rec.quiver_hash, d, qprime, n, opts.method);
  if (opts.cache) {
    if (auto hit = opts.cache->get(key)) {
      rec.count = *hit;
      rec.normalized = normalize(rec.count, qv, d, qprime, n);
      rec.wall_seconds = 0.0;
      return rec;
    }
  }

  MomentSystem sys = MomentSystem::build(qv, d);
  rec.count = (opts.method == Method::Kernel) ? kernel_moment_count(sys, qprime, n, opts)
                                              : brute_moment_count(sys, qprime, n, opts);
  rec.normalized = normalize(rec.count, qv, d, qprime, n);
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (opts.cache) opts.cache->put(key, rec.count);
  return rec;
}

std::vector<SequenceEntry> normalized_sequence(const Quiver& q, const DimVector& d,
                                               std::uint32_t qprime, std::uint32_t n_max,
                                               const Options& opts) {
  std::vector<SequenceEntry> out;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    Record r = count_moment_fiber(q, d, qprime, n, opts);
    SequenceEntry e;
    e.n = n;
    e.count = r.count;
    e.normalized = r.normalized;
    e.difference = out.empty() ? mpq_class(0) : mpq_class(e.normalized - out.back().normalized);
    out.push_back(std::move(e));
  }
  return out;
}

mpz_class count_fiber_over_origin(const Quiver& qv, const DimVector& d, std::uint32_t qprime,
                                  std::uint32_t m, const Options& opts) {
  RingSpec spec{qprime, m + 1};
  spec.validate();
  if (m < 1) throw Error("precondition", "jet order m must be >= 1");
  auto run_kernel = [&]() -> mpz_class {
    MomentSystem sys = MomentSystem::build(qv, d);
    // x = t xi with xi free mod t^m; only xi mod t^(m-1) enters the linear
    // system for the y half, the top coefficient contributes q^nx outright
    int ndigits = sys.nx * static_cast<int>(m - 1);
    unsigned long long total = enum_size(qprime, ndigits, opts.budget);
    std::uint32_t neff = m;  // system solved over F_q[t]/(t^m)
    auto body = [&](unsigned long long begin, unsigned long long end) -> mpz_class {
      std::vector<std::uint32_t> digits(static_cast<size_t>(ndigits));
      decode_digits(begin, qprime, digits);
      std::vector<std::uint32_t> amat(static_cast<size_t>(sys.neq) * sys.ny * neff);
      PowAccumulator acc(qprime, static_cast<long>(neff) * sys.ny);
      for (unsigned long long idx = begin; idx < end; ++idx) {
        std::fill(amat.begin(), amat.end(), 0u);
        for (const auto& mo : sys.monos) {
          std::uint32_t* cell =
              amat.data() + (static_cast<size_t>(mo.eq) * sys.ny + mo.yvar) * neff;
          const std::uint32_t* xd = digits.data() + static_cast<size_t>(mo.xvar) * (m - 1);
          if (mo.sign > 0)
            for (std::uint32_t k = 0; k + 1 < neff; ++k) cell[k + 1] = (cell[k + 1] + xd[k]) % qprime;
          else
            for (std::uint32_t k = 0; k + 1 < neff; ++k)
              cell[k + 1] = (cell[k + 1] + qprime - xd[k]) % qprime;
        }
        long k = kernel_exponent_inplace(amat.data(), sys.neq, sys.ny, qprime, neff);
        acc.add(k);
        bump_digits(digits, qprime);
      }
      return acc.take();
    };
    mpz_class sum = parallel_sum(total, opts.threads, body);
    return sum * pow_mpz(qprime, static_cast<unsigned long>(sys.nx));
  };
  auto run_brute = [&]() -> mpz_class {
    MomentSystem sys = MomentSystem::build(qv, d);
    std::stable_sort(sys.monos.begin(), sys.monos.end(),
                     [](const MomentSystem::Mono& a, const MomentSystem::Mono& b) { return a.eq < b.eq; });
    std::uint32_t n = m + 1;
    int ndigits = (sys.nx + sys.ny) * static_cast<int>(m);  // t-multiples only
    unsigned long long total = enum_size(qprime, ndigits, opts.budget);
    auto body = [&](unsigned long long begin, unsigned long long end) -> mpz_class {
      std::vector<std::uint32_t> digits(static_cast<size_t>(ndigits));
      decode_digits(begin, qprime, digits);
      std::vector<long long> eqacc(n);
      mpz_class found = 0;
      for (unsigned long long idx = begin; idx < end; ++idx) {
        bool zero = true;
        size_t at = 0;
        while (zero && at < sys.monos.size()) {
          int eq = sys.monos[at].eq;
          std::fill(eqacc.begin(), eqacc.end(), 0ll);
          while (at < sys.monos.size() && sys.monos[at].eq == eq) {
            const auto& mo = sys.monos[at];
            // coefficient vectors are (0, digits...) for both halves
            const std::uint32_t* xd = digits.data() + static_cast<size_t>(mo.xvar) * m;
            const std::uint32_t* yd = digits.data() + (static_cast<size_t>(sys.nx) + mo.yvar) * m;
            for (std::uint32_t k1 = 0; k1 < m; ++k1) {
              if (!xd[k1]) continue;
              for (std::uint32_t k2 = 0; k1 + k2 + 2 < n; ++k2)
                eqacc[k1 + k2 + 2] += static_cast<long long>(mo.sign) * xd[k1] * yd[k2];
            }
            ++at;
          }
          for (std::uint32_t k = 0; k < n; ++k)
            if (eqacc[k] % qprime != 0) {
              zero = false;
              break;
            }
        }
        if (zero) ++found;
        bump_digits(digits, qprime);
      }
      return found;
    };
    return parallel_sum(total, opts.threads, body);
  };

  std::string hash = qv.canonical_hash();
  std::string key = cache_key("fiber", hash, d, qprime, m, opts.method);
  if (opts.cache) {
    if (auto hit = opts.cache->get(key)) return *hit;
  }
  mpz_class out = (opts.method == Method::Kernel) ? run_kernel() : run_brute();
  if (opts.cache) opts.cache->put(key, out);
  return out;
}

JetFiberCheck check_jet_fiber_lemma(const Quiver& q, const DimVector& d, std::uint32_t qprime,
                                    std::uint32_t m, const Options& opts) {
  JetFiberCheck chk;
  chk.m = m;
  chk.fiber = count_fiber_over_origin(q, d, qprime, m, opts);
  mpz_class rd = bounds::dim_r_double(q, d);
  mpz_class qr = pow_mpz(qprime, rd.get_ui());
  if (m == 1) {
    chk.expected = qr;
  } else {
    Record prev = count_moment_fiber(q, d, qprime, m - 1, opts);
    chk.expected = qr * prev.count;
  }
  chk.ok = chk.fiber == chk.expected;
  return chk;
}

int jacobian_rank(const MomentSystem& sys, const std::vector<std::uint32_t>& point,
                  std::uint32_t qprime) {
  if (point.size() != static_cast<size_t>(sys.nx + sys.ny))
    throw Error("schema", "point must assign all variables");
  int cols = sys.nx + sys.ny;
  std::vector<std::uint32_t> jac(static_cast<size_t>(sys.neq) * cols, 0);
  for (const auto& mo : sys.monos) {
    std::uint32_t yval = point[static_cast<size_t>(sys.nx + mo.yvar)];
    std::uint32_t xval = point[static_cast<size_t>(mo.xvar)];
    auto bump = [&](int col, std::uint32_t val) {
      std::uint32_t& cell = jac[static_cast<size_t>(mo.eq) * cols + col];
      cell = (mo.sign > 0) ? (cell + val) % qprime : (cell + qprime - val % qprime) % qprime;
    };
    bump(mo.xvar, yval);
    bump(sys.nx + mo.yvar, xval);
  }
  long k = kernel_exponent_inplace(jac.data(), sys.neq, cols, qprime, 1);
  return cols - static_cast<int>(k);
}

namespace {

// all F_q solutions of the moment equations, by direct enumeration
std::vector<std::vector<std::uint32_t>> residue_solutions(const MomentSystem& sys,
                                                          std::uint32_t q,
                                                          unsigned long long budget) {
  int ndigits = sys.nx + sys.ny;
  unsigned long long total = enum_size(q, ndigits, budget);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> digits(static_cast<size_t>(ndigits), 0);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    bool zero = true;
    std::vector<long long> eqacc(static_cast<size_t>(sys.neq), 0);
    for (const auto& mo : sys.monos)
      eqacc[static_cast<size_t>(mo.eq)] +=
          static_cast<long long>(mo.sign) * digits[static_cast<size_t>(mo.xvar)] *
          digits[static_cast<size_t>(sys.nx + mo.yvar)];
    for (int e = 0; e < sys.neq && zero; ++e)
      if (eqacc[static_cast<size_t>(e)] % q != 0) zero = false;
    if (zero) out.push_back(digits);
    bump_digits(digits, q);
  }
  return out;
}

}  // namespace

mpz_class singular_jet_count(const Quiver& qv, const DimVector& d, std::uint32_t qprime,
                             std::uint32_t m, const Options& opts) {
  RingSpec spec{qprime, m + 1};
  spec.validate();
  std::string key = cache_key("singular", qv.canonical_hash(), d, qprime, m, Method::Kernel);
  if (opts.cache) {
    if (auto hit = opts.cache->get(key)) return *hit;
  }
  MomentSystem sys = MomentSystem::build(qv, d);
  mpz_class smooth_rank = d.dot(d) - 1;

  mpz_class total = 0;
  std::uint32_t neff = m;  // lift system lives over F_q[t]/(t^m)
  for (const auto& pt : residue_solutions(sys, qprime, opts.budget)) {
    if (mpz_class(jacobian_rank(sys, pt, qprime)) >= smooth_rank) continue;
    int ndigits = sys.nx * static_cast<int>(m);
    unsigned long long xtotal = enum_size(qprime, ndigits, opts.budget);
    auto body = [&](unsigned long long begin, unsigned long long end) -> mpz_class {
      std::vector<std::uint32_t> digits(static_cast<size_t>(ndigits));
      decode_digits(begin, qprime, digits);
      std::vector<std::uint32_t> amat(static_cast<size_t>(sys.neq) * sys.ny * neff);
      std::vector<std::uint32_t> rhs(static_cast<size_t>(sys.neq) * neff);
      std::vector<long long> eqacc(m + 1);
      PowAccumulator acc(qprime, static_cast<long>(neff) * sys.ny);
      for (unsigned long long idx = begin; idx < end; ++idx) {
        // x = x0 + t xi; the y-lift equation is A(x) eta = -mu(x, y0)/t over t^m
        std::fill(amat.begin(), amat.end(), 0u);
        std::fill(rhs.begin(), rhs.end(), 0u);
        for (const auto& mo : sys.monos) {
          std::uint32_t* cell =
              amat.data() + (static_cast<size_t>(mo.eq) * sys.ny + mo.yvar) * neff;
          std::uint32_t x0 = pt[static_cast<size_t>(mo.xvar)];
          const std::uint32_t* xd = digits.data() + static_cast<size_t>(mo.xvar) * m;
          if (mo.sign > 0) {
            cell[0] = (cell[0] + x0) % qprime;
            for (std::uint32_t k = 0; k + 1 < neff; ++k) cell[k + 1] = (cell[k + 1] + xd[k]) % qprime;
          } else {
            cell[0] = (cell[0] + qprime - x0) % qprime;
            for (std::uint32_t k = 0; k + 1 < neff; ++k)
              cell[k + 1] = (cell[k + 1] + qprime - xd[k]) % qprime;
          }
        }
        // mu(x, y0) over t^(m+1), divided by t, negated
        bool val_ok = true;
        for (int e = 0; e < sys.neq; ++e) {
          std::fill(eqacc.begin(), eqacc.end(), 0ll);
          for (const auto& mo : sys.monos) {
            if (mo.eq != e) continue;
            std::uint32_t y0 = pt[static_cast<size_t>(sys.nx + mo.yvar)];
            if (!y0) continue;
            std::uint32_t x0 = pt[static_cast<size_t>(mo.xvar)];
            const std::uint32_t* xd = digits.data() + static_cast<size_t>(mo.xvar) * m;
            eqacc[0] += static_cast<long long>(mo.sign) * x0 * y0;
            for (std::uint32_t k = 0; k < m; ++k)
              eqacc[k + 1] += static_cast<long long>(mo.sign) * xd[k] * y0;
          }
          long long c0 = ((eqacc[0] % qprime) + qprime) % qprime;
          if (c0 != 0) {
            val_ok = false;  // cannot happen: pt solves the residue equations
            break;
          }
          for (std::uint32_t k = 0; k < neff; ++k) {
            long long c = ((eqacc[k + 1] % qprime) + qprime) % qprime;
            rhs[static_cast<size_t>(e) * neff + k] =
                static_cast<std::uint32_t>((qprime - c) % qprime);
          }
        }
        if (val_ok) {
          auto sol = affine_exponent_inplace(amat.data(), rhs.data(), sys.neq, sys.ny, qprime, neff);
          if (sol) acc.add(*sol);
        }
        bump_digits(digits, qprime);
      }
      return acc.take();
    };
    total += parallel_sum(xtotal, opts.threads, body);
  }
  if (opts.cache) opts.cache->put(key, total);
  return total;
}

MustataDiagnostic mustata_diagnostic(const Quiver& q, const DimVector& d,
                                     const std::vector<std::uint32_t>& qs, std::uint32_t m,
                                     const Options& opts) {
  MustataDiagnostic diag;
  diag.m = m;
  mpz_class dx = bounds::dim_x(q, d);
  diag.threshold = static_cast<long>((m + 1) * dx.get_si());
  diag.strict = true;
  diag.heuristic_dim = -1.0;
  for (std::uint32_t qp : qs) {
    mpz_class c = singular_jet_count(q, d, qp, m, opts);
    diag.counts.emplace_back(qp, c);
    if (c > 0) {
      double logq = std::log(mpz_get_d(c.get_mpz_t())) / std::log(static_cast<double>(qp));
      diag.heuristic_dim = std::max(diag.heuristic_dim, logq);
      // strictness decided exactly: count < q^threshold
      if (diag.threshold < 0 || c >= pow_mpz(qp, static_cast<unsigned long>(diag.threshold)))
        diag.strict = false;
    }
  }
  return diag;
}

}  // namespace count
}  // namespace tnq
