#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistorpath {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

inline double to_double(const Int& x) { return static_cast<double>(x); }
inline double to_double(const Rat& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// gcd of all entries, 0 for the zero vector.
inline Int content(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

/// Largest n with n*n <= x.  Requires x >= 0.
inline Int isqrt_floor(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(x);
}

/// floor(sqrt(a/b)) for a >= 0, b > 0, computed exactly.
inline Int isqrt_floor(const Rat& x) {
  if (x < 0) throw std::domain_error("isqrt_floor: negative argument");
  Int lo = isqrt_floor(Int(numerator(x) / denominator(x)));
  // floor(x) may undershoot the true sqrt by less than 1; nudge upward.
  while ((lo + 1) * (lo + 1) * denominator(x) <= numerator(x)) ++lo;
  return lo;
}

inline Int floor_rat(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string rat_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("rat_from_string: zero denominator");
  return Rat(num, den);
}

inline bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace twistorpath
