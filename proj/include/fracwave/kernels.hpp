#pragma once

#include <cstddef>
#include <vector>

namespace fracwave::kernels {

// Inner-loop primitives of the history convolutions. Every entry point has a
// scalar reference implementation plus SIMD variants selected once at
// startup; the variants are equivalence-tested against the reference in
// tests/test_kernels.cpp. Selection is overridable with FRACWAVE_KERNELS=
// scalar|avx2|neon (unknown names fall back to the best available).
struct Ops {
  const char* name;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i] * b[i] * c[i]
  double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
  // y[i] += s * x[i]
  void (*axpy)(double s, const double* x, double* y, std::size_t n);
  // max_i |a[i] - b[i]|
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
  // max_i |a[i]|
  double (*max_abs)(const double* a, std::size_t n);
};

const Ops& scalar();
const Ops& active();

// All variants compiled into this binary and usable on this CPU.
std::vector<const Ops*> available();

}  // namespace fracwave::kernels
