#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twodist {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// a / b with the sign moved to the numerator; the two-argument constructor
/// of this Boost version rejects negative denominators.
inline Rational ratio(Int a, Int b) {
  if (b == 0) throw std::domain_error("ratio: zero denominator");
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return Rational(a, b);
}

inline bool is_integral(const Rational& r) { return denom(r) == 1; }

/// Largest integer <= r.
inline Int floor(const Rational& r) {
  Int n = numer(r);
  Int d = denom(r);
  Int q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

inline Int binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int ipow(const Int& base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline std::int64_t ipow64(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Exact integer square root if v is a perfect square, -1 otherwise.
inline Int exact_isqrt(const Int& v) {
  if (v < 0) return -1;
  Int s = boost::multiprecision::sqrt(v);
  return s * s == v ? s : Int(-1);
}

/// True when r = (a/b)^2 for integers a, b.
inline bool is_rational_square(const Rational& r) {
  return r >= 0 && exact_isqrt(numer(r)) >= 0 && exact_isqrt(denom(r)) >= 0;
}

inline std::int64_t to_i64(const Int& v) { return v.convert_to<std::int64_t>(); }

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace twodist
