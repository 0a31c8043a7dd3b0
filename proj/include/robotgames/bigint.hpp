#pragma once

// Arbitrary-precision integer support shared by every stage of the pipeline.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace robotgames {

using Int = boost::multiprecision::cpp_int;

/// Raised when a value exceeds the ROBOTGAMES_MAX_INT_BITS cap.
struct ArithmeticLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int pow8(std::size_t k) { return Int(1) << (3 * k); }

inline std::string to_decimal(const Int& v) { return v.str(); }

/// Strict decimal parser: optional leading '-', then one or more digits.
inline Int parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size()) throw std::invalid_argument("empty decimal string");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed decimal string '" + std::string(text) + "'");
    }
  }
  return Int(std::string(text));
}

/// Floor modulus: result lies in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline int sign(const Int& v) { return v.sign(); }

// 0 means unlimited. Read once per process.
inline std::size_t max_int_bits() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("ROBOTGAMES_MAX_INT_BITS");
    if (env == nullptr || *env == '\0') return std::size_t{0};
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') return std::size_t{0};
    return static_cast<std::size_t>(parsed);
  }();
  return cap;
}

inline void check_int_size(const Int& v) {
  std::size_t cap = max_int_bits();
  if (cap == 0 || v == 0) return;
  std::size_t bits = boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
  if (bits > cap) {
    throw ArithmeticLimit("integer of " + std::to_string(bits) + " bits exceeds ROBOTGAMES_MAX_INT_BITS=" +
                          std::to_string(cap));
  }
}

struct IntHash {
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t operator()(const Int& v) const noexcept {
    const auto& be = v.backend();
    std::uint64_t h = be.sign() ? 0x5bd1e995ULL : 0;
    for (std::size_t i = 0; i < be.size(); ++i) h = mix(h ^ static_cast<std::uint64_t>(be.limbs()[i]));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace robotgames
