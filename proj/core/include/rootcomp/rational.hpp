#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rootcomp {

// Exact rational scalar used throughout the library. No floating point, no
// tolerances: every comparison in the public API is an exact one.
using Q = mpq_class;

inline Q q_of(long long n) { return Q(static_cast<long>(n)); }

inline Q q_of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Q q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline bool q_is_integer(const Q& q) { return q.get_den() == 1; }

inline long long q_to_ll(const Q& q) {
  if (!q_is_integer(q)) throw std::invalid_argument("expected integer, got " + q.get_str());
  if (!q.get_num().fits_slong_p())
    throw std::overflow_error("integer out of machine range: " + q.get_str());
  return q.get_num().get_si();
}

// Reduced "p/q" form; integers print without the "/1".
inline std::string q_str(const Q& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
std::optional<Q> q_parse(const std::string& text);

std::size_t q_hash(const Q& q);

// FNV-style combine for integer coordinate vectors used as hash keys.
struct VecHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace rootcomp
