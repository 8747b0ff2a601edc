#include <doctest.h>

#include <cstdio>

#include "tnq/bounds.hpp"
#include "tnq/catalog.hpp"
#include "tnq/counting.hpp"
#include "tnq/error.hpp"

using namespace tnq;
using count::Method;

namespace {

count::Options kernel_opts() {
  count::Options o;
  return o;
}

count::Options brute_opts() {
  count::Options o;
  o.method = Method::Brute;
  return o;
}

mpz_class qpow(std::uint32_t q, unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), q, e);
  return p;
}

}  // namespace

TEST_CASE("moment system construction verifies the trace relation") {
  for (const Quiver& q : catalog::small_quiver_corpus(2, 2, 2)) {
    DimVector d = q.vcount() == 1 ? dims({2}) : dims({2, 1});
    auto sys = MomentSystem::build(q, d);
    CHECK(sys.nx == sys.ny);
  }
}

TEST_CASE("one-arrow counts match the closed forms, both methods") {
  Quiver a2 = path_quiver(2);
  DimVector ones = dims({1, 1});
  for (std::uint32_t q : {2u, 3u})
    for (std::uint32_t n = 1; n <= 3; ++n) {
      mpz_class want = mpz_class(n + 1) * qpow(q, n) - mpz_class(n) * qpow(q, n - 1);
      CHECK(count::count_moment_fiber(a2, ones, q, n, kernel_opts()).count == want);
      CHECK(count::count_moment_fiber(a2, ones, q, n, brute_opts()).count == want);
    }
}

TEST_CASE("one-vertex dimension-one counts are free") {
  Quiver s2 = loop_quiver(2);
  for (std::uint32_t q : {2u, 3u})
    for (std::uint32_t n = 1; n <= 3; ++n)
      CHECK(count::count_moment_fiber(s2, dims({1}), q, n, kernel_opts()).count ==
            qpow(q, 4 * n));
}

TEST_CASE("two-loop vertex at dimension two: methods agree, value frozen") {
  Quiver s2 = loop_quiver(2);
  auto k = count::count_moment_fiber(s2, dims({2}), 2, 1, kernel_opts());
  auto b = count::count_moment_fiber(s2, dims({2}), 2, 1, brute_opts());
  CHECK(k.count == b.count);
  CHECK(k.count == 11776);  // oracle run over all 2^16 points
}

TEST_CASE("triangle counts frozen against brute force") {
  Quiver tri = cycle_quiver(3);
  DimVector ones = dims({1, 1, 1});
  const mpz_class expected[3] = {mpz_class(28), mpz_class(592), mpz_class(11008)};
  for (std::uint32_t n = 1; n <= 3; ++n) {
    CHECK(count::count_moment_fiber(tri, ones, 2, n, kernel_opts()).count == expected[n - 1]);
    CHECK(count::count_moment_fiber(tri, ones, 2, n, brute_opts()).count == expected[n - 1]);
  }
}

TEST_CASE("normalized sequences") {
  Quiver a2 = path_quiver(2);
  auto seq = count::normalized_sequence(a2, dims({1, 1}), 2, 3, kernel_opts());
  REQUIRE(seq.size() == 3);
  CHECK(seq[0].normalized == mpq_class(3, 2));
  CHECK(seq[1].normalized == mpq_class(2));
  CHECK(seq[2].normalized == mpq_class(5, 2));
  CHECK(seq[1].difference == mpq_class(1, 2));
  CHECK(seq[2].difference == mpq_class(1, 2));

  auto flat = count::normalized_sequence(loop_quiver(2), dims({1}), 3, 4, kernel_opts());
  for (const auto& e : flat) CHECK(e.normalized == 1);
}

TEST_CASE("fiber over origin on frozen examples") {
  Quiver a2 = path_quiver(2);
  DimVector ones = dims({1, 1});
  CHECK(count::count_fiber_over_origin(a2, ones, 2, 1, kernel_opts()) == 4);
  CHECK(count::count_fiber_over_origin(a2, ones, 2, 2, kernel_opts()) == 12);
  for (std::uint32_t m = 1; m <= 3; ++m)
    CHECK(count::count_fiber_over_origin(a2, ones, 2, m, kernel_opts()) ==
          count::count_fiber_over_origin(a2, ones, 2, m, brute_opts()));

  Quiver s2 = loop_quiver(2);
  for (std::uint32_t m = 1; m <= 2; ++m)
    CHECK(count::count_fiber_over_origin(s2, dims({1}), 2, m, kernel_opts()) ==
          count::count_fiber_over_origin(s2, dims({1}), 2, m, brute_opts()));
}

TEST_CASE("jet fiber factorization") {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    CHECK(count::check_jet_fiber_lemma(path_quiver(2), dims({1, 1}), 2, m, kernel_opts()).ok);
    CHECK(count::check_jet_fiber_lemma(loop_quiver(2), dims({1}), 3, m, kernel_opts()).ok);
  }
  CHECK(count::check_jet_fiber_lemma(loop_quiver(2), dims({2}), 2, 2, kernel_opts()).ok);
}

TEST_CASE("jacobian ranks") {
  Quiver s2 = loop_quiver(2);
  DimVector two = dims({2});
  auto sys = MomentSystem::build(s2, two);
  // search a residue solution of full rank d.d - 1 = 3
  std::vector<std::uint32_t> point(static_cast<size_t>(sys.nx + sys.ny), 0);
  bool found = false;
  for (unsigned long long idx = 0; idx < (1ull << 16) && !found; ++idx) {
    for (int b = 0; b < sys.nx + sys.ny; ++b)
      point[static_cast<size_t>(b)] = static_cast<std::uint32_t>((idx >> b) & 1);
    std::vector<long long> eq(static_cast<size_t>(sys.neq), 0);
    for (const auto& mo : sys.monos)
      eq[static_cast<size_t>(mo.eq)] += static_cast<long long>(mo.sign) *
                                        point[static_cast<size_t>(mo.xvar)] *
                                        point[static_cast<size_t>(sys.nx + mo.yvar)];
    bool zero = true;
    for (long long v : eq)
      if (v % 2 != 0) zero = false;
    if (zero && count::jacobian_rank(sys, point, 2) == 3) found = true;
  }
  CHECK(found);
  // the origin is singular
  std::fill(point.begin(), point.end(), 0u);
  CHECK(count::jacobian_rank(sys, point, 2) == 0);
}

TEST_CASE("singular jet counts on frozen examples") {
  Quiver a2 = path_quiver(2);
  CHECK(count::singular_jet_count(a2, dims({1, 1}), 2, 1, kernel_opts()) == 4);
  Quiver s2 = loop_quiver(2);
  CHECK(count::singular_jet_count(s2, dims({1}), 2, 1, kernel_opts()) == 0);
  CHECK(count::singular_jet_count(s2, dims({1}), 2, 2, kernel_opts()) == 0);
}

TEST_CASE("jet dimension diagnostic") {
  auto diag = count::mustata_diagnostic(path_quiver(2), dims({1, 1}), {2, 3}, 1, kernel_opts());
  CHECK(diag.threshold == 2);
  CHECK_FALSE(diag.strict);  // counts reach q^2 exactly
  auto smooth = count::mustata_diagnostic(loop_quiver(2), dims({1}), {2, 3}, 1, kernel_opts());
  CHECK(smooth.strict);  // empty singular locus
}

TEST_CASE("orientation invariance of counts") {
  Quiver a2 = path_quiver(2);
  Quiver a2r = Quiver::make({"v1", "v2"}, {{"v2", "v1"}});
  Quiver tri = cycle_quiver(3);
  Quiver tri_flip =
      Quiver::make({"v1", "v2", "v3"}, {{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
  for (std::uint32_t n = 1; n <= 2; ++n) {
    CHECK(count::count_moment_fiber(a2, dims({1, 1}), 3, n, kernel_opts()).count ==
          count::count_moment_fiber(a2r, dims({1, 1}), 3, n, kernel_opts()).count);
    CHECK(count::count_moment_fiber(tri, dims({1, 1, 1}), 2, n, kernel_opts()).count ==
          count::count_moment_fiber(tri_flip, dims({1, 1, 1}), 2, n, kernel_opts()).count);
  }
}

TEST_CASE("partition determinism across worker counts") {
  Quiver s2 = loop_quiver(2);
  count::Options one = kernel_opts();
  count::Options three = kernel_opts();
  three.threads = 3;
  CHECK(count::count_moment_fiber(s2, dims({2}), 2, 1, one).count ==
        count::count_moment_fiber(s2, dims({2}), 2, 1, three).count);
}

TEST_CASE("reduction inequality between consecutive levels") {
  for (const Quiver& q : {path_quiver(2), cycle_quiver(3)}) {
    DimVector ones = dims(std::vector<Int>(static_cast<size_t>(q.vcount()), 1));
    mpz_class qr = bounds::dim_r_double(q, ones);
    mpz_class prev = count::count_moment_fiber(q, ones, 2, 1, kernel_opts()).count;
    for (std::uint32_t n = 2; n <= 3; ++n) {
      mpz_class cur = count::count_moment_fiber(q, ones, 2, n, kernel_opts()).count;
      CHECK(cur <= qpow(2, qr.get_ui()) * prev);
      prev = cur;
    }
  }
}

TEST_CASE("budget and validation errors") {
  count::Options tiny = kernel_opts();
  tiny.budget = 4;
  CHECK_THROWS_AS(count::count_moment_fiber(loop_quiver(2), dims({2}), 2, 1, tiny), Error);
  CHECK_THROWS_AS(count::count_moment_fiber(path_quiver(2), dims({1, 1}), 4, 1, kernel_opts()),
                  Error);  // q must be prime
}

TEST_CASE("cache round trip and persistence") {
  std::string path = "tnq_test_cache.tsv";
  std::remove(path.c_str());
  {
    count::Cache cache(path);
    count::Options o = kernel_opts();
    o.cache = &cache;
    auto first = count::count_moment_fiber(path_quiver(2), dims({1, 1}), 2, 2, o);
    auto again = count::count_moment_fiber(path_quiver(2), dims({1, 1}), 2, 2, o);
    CHECK(first.count == again.count);
    CHECK(again.wall_seconds == 0.0);  // cache hit short-circuits
  }
  {
    count::Cache cache(path);  // reload from disk
    CHECK(cache.get("moment|" + path_quiver(2).canonical_hash() + "|d=1,1|q=2|n=2|kernel")
              .has_value());
  }
  std::remove(path.c_str());
}
