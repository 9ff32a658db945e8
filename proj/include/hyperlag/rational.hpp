#ifndef HYPERLAG_RATIONAL_HPP
#define HYPERLAG_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlag {

/// Arbitrary-precision rational, always in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long p, long long q = 1) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  return Rational(BigInt(p), BigInt(q));
}

/// "p/q" (q = 1 for integers).
inline std::string to_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

/// Accepts "p/q" or an integer "p".
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    BigInt p(std::string(text.substr(0, slash)));
    BigInt q(std::string(text.substr(slash + 1)));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Best rational approximation with denominator at most `max_den`, by
/// continued fractions (the last convergent or a semiconvergent).
inline Rational approximate(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot approximate a non-finite value");
  const bool neg = x < 0;
  double rest = std::fabs(x);
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(rest);
    if (fl > 9.0e15) break;
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t q2 = q0 + a * q1;
    if (q2 > max_den) {
      // Semiconvergent with the largest admissible multiplier, if it is closer.
      const std::int64_t k = (max_den - q0) / q1;
      const std::int64_t ps = p0 + k * p1, qs = q0 + k * q1;
      const double target = std::fabs(x);
      if (k > 0 && std::fabs(static_cast<double>(ps) / static_cast<double>(qs) - target) <
                       std::fabs(static_cast<double>(p1) / static_cast<double>(q1) - target)) {
        p1 = ps;
        q1 = qs;
      }
      break;
    }
    const std::int64_t p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = rest - fl;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  Rational r = make_rational(p1, q1);
  return neg ? Rational(-r) : r;
}

}  // namespace hyperlag

#endif  // HYPERLAG_RATIONAL_HPP
