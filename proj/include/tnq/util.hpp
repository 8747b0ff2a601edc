#pragma once

#include <cstdint>
#include <string>

namespace tnq {

// FNV-1a, 64-bit. Used for canonical quiver hashes and input-file hashes in
// run manifests; not cryptographic.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

inline std::string fnv1a64_hex(const std::string& data) { return hex64(fnv1a64(data)); }

}  // namespace tnq
