#pragma once

#include <cmath>
#include <cstdint>

namespace fracwave {

// Double-double value: the unevaluated sum hi + lo, good for ~32 decimal
// digits. The Taylor branch of the Mittag-Leffler evaluator runs entirely in
// this type because its alternating sums cancel down to ~e^{-|z|^{1/alpha}}
// of the largest partial sum.
struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

// Unit roundoff of the accumulator, 2^-104.
inline constexpr double kDDEpsilon = 4.93038065763132378e-32;

namespace dd_ops {

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Requires |a| >= |b|.
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_ops

inline DD operator+(DD a, DD b) {
  DD s = dd_ops::two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return dd_ops::quick_two_sum(s.hi, lo);
}

inline DD operator+(DD a, double b) { return a + DD(b); }

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }
inline DD operator-(DD a, double b) { return a + DD(-b); }

inline DD operator*(DD a, DD b) {
  DD p = dd_ops::two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return dd_ops::quick_two_sum(p.hi, lo);
}

inline DD operator*(DD a, double b) { return a * DD(b); }

inline DD operator/(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  DD q = dd_ops::quick_two_sum(q1, q2);
  return q + q3;
}

inline DD operator/(DD a, double b) { return a / DD(b); }

inline bool operator<(DD a, double b) { return a.hi < b || (a.hi == b && a.lo < 0.0); }
inline bool operator>(DD a, double b) { return a.hi > b || (a.hi == b && a.lo > 0.0); }

inline DD dd_abs(DD a) { return a.hi < 0.0 ? -a : a; }

// DD with a separate power-of-two exponent. Intermediates like z^k and
// Gamma(alpha*k + beta) overflow the double range long before the series
// terms they form do; the mantissa/exponent split keeps both exact.
struct ScaledDD {
  DD m;            // normalized so |m.hi| is in [0.5, 1), or 0
  std::int64_t e2 = 0;

  static ScaledDD from(DD v) {
    ScaledDD s{v, 0};
    s.normalize();
    return s;
  }

  void normalize() {
    if (m.hi == 0.0) {
      m.lo = 0.0;
      e2 = 0;
      return;
    }
    int ex = 0;
    std::frexp(m.hi, &ex);
    m.hi = std::ldexp(m.hi, -ex);
    m.lo = std::ldexp(m.lo, -ex);
    e2 += ex;
  }

  DD to_dd() const {
    if (m.hi == 0.0) return DD(0.0);
    if (e2 > 1020) {
      double inf = m.hi > 0.0 ? HUGE_VAL : -HUGE_VAL;
      return DD(inf);
    }
    if (e2 < -1065) return DD(0.0);
    int e = static_cast<int>(e2);
    return {std::ldexp(m.hi, e), std::ldexp(m.lo, e)};
  }
};

inline ScaledDD operator*(ScaledDD a, ScaledDD b) {
  ScaledDD r{a.m * b.m, a.e2 + b.e2};
  r.normalize();
  return r;
}

inline ScaledDD operator*(ScaledDD a, DD b) {
  ScaledDD r{a.m * b, a.e2};
  r.normalize();
  return r;
}

inline ScaledDD operator/(ScaledDD a, ScaledDD b) {
  ScaledDD r{a.m / b.m, a.e2 - b.e2};
  r.normalize();
  return r;
}

}  // namespace fracwave
