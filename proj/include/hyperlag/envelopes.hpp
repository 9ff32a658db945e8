#ifndef HYPERLAG_ENVELOPES_HPP
#define HYPERLAG_ENVELOPES_HPP

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "hyperlag/rational.hpp"

// Closed-form upper envelopes used in the extremal bounds. Every function is a
// template over the scalar: double for grid scans, Rational for exact checks.

namespace hyperlag::envelope {

namespace detail {

template <class T>
constexpr T slack() {
  if constexpr (std::is_floating_point_v<T>) return T(1e-12);
  else return T(0);
}

template <class T>
void require_unit(const T& a, const T& hi, const char* what) {
  if (a < -slack<T>() || a > hi + slack<T>()) throw std::domain_error(what);
}

}  // namespace detail

/// Bound for F5-free graphs with apex weight c and clique-part weight a:
/// (c² + 2a² + 1 + 2kac − 2c − 2a) / (6(k+1)), for a, c >= 0, a + c <= 1, k >= 3.
template <class T>
T f5(const T& a, const T& c, int k) {
  detail::require_unit(a, T(1), "envelope f5: a outside [0,1]");
  detail::require_unit(c, T(1), "envelope f5: c outside [0,1]");
  detail::require_unit(T(a + c), T(1), "envelope f5: a + c exceeds 1");
  if (k < 3) throw std::domain_error("envelope f5: k must be at least 3");
  return (c * c + 2 * a * a + 1 + 2 * k * a * c - 2 * c - 2 * a) / (6 * (k + 1));
}

/// λ(K_{2t-1}^3) = (2t-2)(2t-3) / (6(2t-1)²).
inline Rational good_m(int t) {
  if (t < 2) throw std::domain_error("good_m: t must be at least 2");
  const long long tt = t;
  return make_rational((2 * tt - 2) * (2 * tt - 3), 6 * (2 * tt - 1) * (2 * tt - 1));
}

/// Good-graph bound a³/16 + a²(1−a)/4 + m(1−a)³ with a the weight on the
/// good pairs and m = λ(K_{2t-1}^3).
template <class T>
T good(const T& a, const T& m) {
  detail::require_unit(a, T(1), "envelope good: a outside [0,1]");
  const T b = 1 - a;
  return a * a * a / 16 + a * a * b / 4 + m * b * b * b;
}

/// The t >= 4 relaxation with leading coefficient 1/12 in place of 1/16.
template <class T>
T good_relaxed(const T& a, const T& m) {
  detail::require_unit(a, T(1), "envelope good_relaxed: a outside [0,1]");
  const T b = 1 - a;
  return a * a * a / 12 + a * a * b / 4 + m * b * b * b;
}

/// f'(a) = −(1/2 + 3m)a² + (6m + 1/2)a − 3m; zeros at 6m/(6m+1) and 1.
template <class T>
T good_relaxed_derivative(const T& a, const T& m) {
  return -(T(1) / 2 + 3 * m) * a * a + (6 * m + T(1) / 2) * a - 3 * m;
}

/// t = 3 expansion: (−107a³ + 196a² − 96a + 32) / 400.
template <class T>
T good_t3(const T& a) {
  detail::require_unit(a, T(1), "envelope good_t3: a outside [0,1]");
  return (-107 * a * a * a + 196 * a * a - 96 * a + 32) / 400;
}

template <class T>
T good_t3_derivative(const T& a) {
  return (-321 * a * a + 392 * a - 96) / 400;
}

/// Critical points (196 ∓ √7600)/321 of the t = 3 cubic.
inline double good_t3_critical_low() { return (196.0 - std::sqrt(7600.0)) / 321.0; }
inline double good_t3_critical_high() { return (196.0 + std::sqrt(7600.0)) / 321.0; }

/// m = (s−2)(s−3)/(s−1)² for the S_{2,t} ⊔ H bound (6·λ(K_{s-1}^3)).
inline Rational s2t_m(int s) {
  if (s < 3) throw std::domain_error("s2t_m: s must be at least 3");
  const long long ss = s;
  return make_rational((ss - 2) * (ss - 3), (ss - 1) * (ss - 1));
}

/// 2a³ − 3a² + a + (1−2a)³ m / 6 on 0 <= a <= 1/2.
template <class T>
T s2t(const T& a, int s) {
  detail::require_unit(a, T(1) / 2, "envelope s2t: a outside [0,1/2]");
  T m;
  if constexpr (std::is_floating_point_v<T>) m = to_double(s2t_m(s));
  else m = T(s2t_m(s));
  const T b = 1 - 2 * a;
  return 2 * a * a * a - 3 * a * a + a + b * b * b * m / 6;
}

/// f'(a) = (6 − 4m)a² + (4m − 6)a + 1 − m.
template <class T>
T s2t_derivative(const T& a, int s) {
  T m;
  if constexpr (std::is_floating_point_v<T>) m = to_double(s2t_m(s));
  else m = T(s2t_m(s));
  return (6 - 4 * m) * a * a + (4 * m - 6) * a + 1 - m;
}

/// Maximizer 1/2 − √(3−2m)/(6−4m) of the S_{2,t} ⊔ H cubic.
inline double s2t_argmax(int s) {
  const double m = to_double(s2t_m(s));
  return 0.5 - std::sqrt(3 - 2 * m) / (6 - 4 * m);
}

/// Closed-form maximum (s−1) / (6√(s²+4s−9)).
inline double s2t_max(int s) {
  const double sd = s;
  return (sd - 1) / (6 * std::sqrt(sd * sd + 4 * sd - 9));
}

/// λ(K_{s+4}^3) = (s+3)(s+2) / (6(s+4)²).
inline Rational s2t_target(int s) {
  const long long ss = s;
  return make_rational((ss + 3) * (ss + 2), 6 * (ss + 4) * (ss + 4));
}

/// g(s) = 3s⁴ + 38s³ + 103s² − 140s − 580, exactly.
inline BigInt quartic_gap(long long s) {
  const BigInt x = s;
  return 3 * x * x * x * x + 38 * x * x * x + 103 * x * x - 140 * x - 580;
}

}  // namespace hyperlag::envelope

#endif  // HYPERLAG_ENVELOPES_HPP
