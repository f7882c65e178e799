#pragma once

#include "fracwave/dd.hpp"

namespace fracwave {

// Pole test shared by every Gamma consumer: x is treated as a pole of Gamma
// when it is within `tol` of a non-positive integer.
bool is_gamma_pole(double x, double tol = 1e-12);

// sin(pi * x) with the period reduced exactly before the libm call.
double sin_pi(double x);

// Gamma(x) by Lanczos approximation (g = 7, 9 terms), reflection for x < 0.
// Returns +/-infinity at poles.
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// 1/Gamma(x); exactly 0 at poles.
double recip_gamma(double x);

// sign and log of |1/Gamma(x)|, usable where 1/Gamma(x) itself would
// overflow (x a large negative non-integer). sign = 0 flags a pole.
struct SignedLogValue {
  int sign = 0;
  double log_abs = 0.0;
};
SignedLogValue recip_gamma_log(double x);

namespace detail {

struct GammaDD {
  ScaledDD value;
  bool pole = false;
};

// Gamma(x) in double-double with a power-of-two exponent, for any real x.
// Feeds the Mittag-Leffler series terms, where plain-double Gamma would cap
// the whole sum at ~1e-16 relative accuracy before cancellation even starts.
GammaDD gamma_dd(DD x);

}  // namespace detail

}  // namespace fracwave
