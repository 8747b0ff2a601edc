#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tnq {

// Error with a stable machine-readable code, surfaced verbatim by the CLI.
// Codes in use: schema, vertex-mismatch, zero-dim, disconnected, precondition,
// cap-exceeded, budget-exceeded, non-unit, non-prime, negative-arrow-count,
// odd-loop-count, rank-mismatch, ambient-mismatch, unsupported, io.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace tnq
