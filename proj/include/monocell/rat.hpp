#pragma once

// Exact rational scalar used throughout. All geometric predicates are decided
// with this type; no floating point is used anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace monocell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long p, long long q = 1) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(Int(p), Int(q));
}

inline int sign(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Serialized form is "p/q" with gcd(|p|,q)=1, q>0; "p" is accepted and
// emitted when q=1.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("malformed rational literal: '" + s + "'");
  };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q <= 0) throw bad();
    return Rat(p, q);
  } catch (const std::exception&) {
    throw bad();
  }
}

// Integer power with non-negative exponent.
inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc(1), b = base;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

}  // namespace monocell
