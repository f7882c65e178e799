#include "fracwave/gammafn.hpp"

#include <cmath>
#include <limits>

#include "fracwave/gamma_taylor.hpp"

namespace fracwave {

namespace {

// Lanczos g = 7, 9-term coefficients (Godfrey's table).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;

// Lanczos core for x >= 0.5.
double gamma_positive(double x) {
  double a = kLanczos[0];
  double t = x + kLanczosG - 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i - 1.0);
  return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

double log_gamma_positive(double x) {
  double a = kLanczos[0];
  double t = x + kLanczosG - 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i - 1.0);
  return kLogSqrtTwoPi + (x - 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

bool is_gamma_pole(double x, double tol) {
  if (x > 0.5) return false;
  double n = std::nearbyint(x);
  return n <= 0.0 && std::abs(x - n) <= tol;
}

double sin_pi(double x) {
  double n = std::nearbyint(x);
  double r = x - n;  // exact for |x| < 2^52
  double s = std::sin(kPi * r);
  // odd half-period flips the sign
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

double gamma_fn(double x) {
  if (is_gamma_pole(x)) {
    return std::numeric_limits<double>::infinity();
  }
  if (x >= 0.5) return gamma_positive(x);
  // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
  return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double log_gamma(double x) {
  if (x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x >= 0.5) return log_gamma_positive(x);
  // x in (0, 0.5): sin(pi x) > 0, reflect
  return std::log(kPi / sin_pi(x)) - log_gamma_positive(1.0 - x);
}

double recip_gamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  if (x >= 0.5) return 1.0 / gamma_positive(x);
  return sin_pi(x) * gamma_positive(1.0 - x) / kPi;
}

SignedLogValue recip_gamma_log(double x) {
  if (is_gamma_pole(x)) return {0, -std::numeric_limits<double>::infinity()};
  if (x >= 0.5) return {1, -log_gamma_positive(x)};
  double s = sin_pi(x);
  int sign = s > 0.0 ? 1 : -1;
  return {sign, std::log(std::abs(s) / kPi) + log_gamma_positive(1.0 - x)};
}

namespace detail {

namespace {

// 1/Gamma(y) for y in [1, 2], double-double Horner on the frozen table.
DD recip_gamma_base(DD y) {
  DD w = y - 1.5;
  DD acc(kGammaTaylorHi[kGammaTaylorCount - 1], kGammaTaylorLo[kGammaTaylorCount - 1]);
  for (int i = kGammaTaylorCount - 2; i >= 0; --i) {
    acc = acc * w + DD(kGammaTaylorHi[i], kGammaTaylorLo[i]);
  }
  return acc;
}

}  // namespace

GammaDD gamma_dd(DD x) {
  GammaDD out;
  if (is_gamma_pole(x.hi)) {
    out.pole = true;
    return out;
  }
  // Reduce to the base interval [1, 2] with exact-in-DD shifts.
  ScaledDD num = ScaledDD::from(DD(1.0));
  ScaledDD den = ScaledDD::from(DD(1.0));
  DD y = x;
  while (y > 2.0) {
    y = y - 1.0;
    num = num * y;
  }
  while (y < 1.0) {
    den = den * y;
    y = y + 1.0;
  }
  ScaledDD base = ScaledDD::from(DD(1.0)) / ScaledDD::from(recip_gamma_base(y));
  out.value = num * base / den;
  return out;
}

}  // namespace detail

}  // namespace fracwave
