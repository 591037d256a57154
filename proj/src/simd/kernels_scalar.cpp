#include "qocr/simd/kernels.hpp"

#include <cmath>

namespace qocr::simd::detail {
namespace {

cplx inner(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double norm_sq(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

void abs_sq(const cplx* a, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::norm(a[i]);
}

void rotate(cplx* amp, std::size_t dim, unsigned qubit, double c, double s) {
  const std::size_t half = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < dim; base += 2 * half) {
    for (std::size_t k = 0; k < half; ++k) {
      const cplx a0 = amp[base + k];
      const cplx a1 = amp[base + k + half];
      amp[base + k] = c * a0 - s * a1;
      amp[base + k + half] = s * a0 + c * a1;
    }
  }
}

double l1_distance(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i] - y[i]);
  return acc;
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, "scalar",  inner,  axpy,
                               norm_sq,     abs_sq,    rotate, l1_distance};

}  // namespace qocr::simd::detail
