#ifndef HEC_SCALAR_HPP
#define HEC_SCALAR_HPP

#include <gmpxx.h>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hec {

/// Exact rational scalar. Canonical form is maintained by gmpxx.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p" or a decimal integer string.
inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    return r;
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Forward-mode dual number; carries one directional derivative.
struct Dual {
  double v = 0.0;
  double d = 0.0;
  Dual() = default;
  Dual(double value) : v(value), d(0.0) {}
  Dual(double value, double deriv) : v(value), d(deriv) {}

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) { d = (d * o.v - v * o.d) / (o.v * o.v); v /= o.v; return *this; }
};

inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(Dual a, const Dual& b) { return a /= b; }
inline Dual operator-(const Dual& a) { return Dual(-a.v, -a.d); }
inline bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
inline bool operator!=(const Dual& a, const Dual& b) { return a.v != b.v; }
inline bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
inline bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
inline Dual sqrt(const Dual& a) {
  double s = std::sqrt(a.v);
  return Dual(s, a.d / (2.0 * s));
}
inline Dual abs(const Dual& a) { return a.v < 0 ? -a : a; }

/// Per-scalar hooks used by the templated linear algebra.
template <class S> struct ScalarOps;

template <> struct ScalarOps<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double to_double(double x) { return x; }
  static double pivot_size(double x) { return std::fabs(x); }
  static bool is_zero(double x) { return x == 0.0; }
};

template <> struct ScalarOps<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static double to_double(const Rat& x) { return x.get_d(); }
  static double pivot_size(const Rat& x) { return std::fabs(x.get_d()); }
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
};

template <> struct ScalarOps<Dual> {
  static constexpr bool exact = false;
  static Dual zero() { return Dual(0.0); }
  static Dual one() { return Dual(1.0); }
  static double to_double(const Dual& x) { return x.v; }
  static double pivot_size(const Dual& x) { return std::fabs(x.v); }
  static bool is_zero(const Dual& x) { return x.v == 0.0; }
};

}  // namespace hec

#endif
