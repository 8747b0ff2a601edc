#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tnq/moment.hpp"
#include "tnq/quiver.hpp"

namespace tnq {
namespace count {

enum class Method { Kernel, Brute };

const char* method_name(Method m);

/// Append-friendly keyed store; keys embed the quiver hash, parameters and
/// method. Concurrent reads are lock-free after load; writes are serialized.
class Cache {
 public:
  explicit Cache(std::string path);
  std::optional<mpz_class> get(const std::string& key) const;
  void put(const std::string& key, const mpz_class& value);

 private:
  std::string path_;
  std::map<std::string, std::string> entries_;
  mutable std::mutex mu_;
};

struct Options {
  Method method = Method::Kernel;
  int threads = 1;
  unsigned long long budget = 1ull << 26;  // max enumeration points
  Cache* cache = nullptr;
};

struct Record {
  std::string quiver_hash;
  DimVector d;
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  mpz_class count;
  mpq_class normalized;  // count / q^(n dim X)
  Method method = Method::Kernel;
  double wall_seconds = 0.0;
};

/// Points of the zero fiber of the moment map over F_q[t]/(t^n). The kernel
/// method enumerates the x half and sums q^k over the kernels of the linear
/// systems in the y half; Brute enumerates everything.
Record count_moment_fiber(const Quiver& q, const DimVector& d, std::uint32_t qprime,
                          std::uint32_t n, const Options& opts = {});

struct SequenceEntry {
  std::uint32_t n = 0;
  mpz_class count;
  mpq_class normalized;
  mpq_class difference;  // vs previous entry, 0 at n=1
};

std::vector<SequenceEntry> normalized_sequence(const Quiver& q, const DimVector& d,
                                               std::uint32_t qprime, std::uint32_t n_max,
                                               const Options& opts = {});

/// Points of the fiber over the origin at jet order m, i.e. solutions over
/// F_q[t]/(t^(m+1)) reducing to 0 mod t.
mpz_class count_fiber_over_origin(const Quiver& q, const DimVector& d, std::uint32_t qprime,
                                  std::uint32_t m, const Options& opts = {});

struct JetFiberCheck {
  std::uint32_t m = 0;
  mpz_class fiber;
  mpz_class expected;  // q^(dim R double) * count(m-1), or q^(dim R double) at m=1
  bool ok = false;
};

JetFiberCheck check_jet_fiber_lemma(const Quiver& q, const DimVector& d, std::uint32_t qprime,
                                    std::uint32_t m, const Options& opts = {});

/// Rank over F_q of the Jacobian of the moment equations at the given point
/// (nx + ny residues). Smooth points of the fiber reach d.d - 1.
int jacobian_rank(const MomentSystem& sys, const std::vector<std::uint32_t>& point,
                  std::uint32_t qprime);

/// Points of the fiber over F_q[t]/(t^(m+1)) whose reduction mod t is a
/// singular point (Jacobian rank < d.d - 1).
mpz_class singular_jet_count(const Quiver& q, const DimVector& d, std::uint32_t qprime,
                             std::uint32_t m, const Options& opts = {});

struct MustataDiagnostic {
  std::uint32_t m = 0;
  std::vector<std::pair<std::uint32_t, mpz_class>> counts;  // (q, singular jet count)
  double heuristic_dim = 0.0;  // max over q of log_q(count); NOT certified
  long threshold = 0;          // (m+1) dim X
  bool strict = false;         // heuristic_dim < threshold
};

/// Heuristic jet-dimension probe from point counts over several primes.
/// Counts are exact; the dimension estimate is a log fit and is not a
/// certificate.
MustataDiagnostic mustata_diagnostic(const Quiver& q, const DimVector& d,
                                     const std::vector<std::uint32_t>& qs, std::uint32_t m,
                                     const Options& opts = {});

}  // namespace count
}  // namespace tnq
