// AArch64 Advanced SIMD. One complex<double> per float64x2_t.

#include <arm_neon.h>

#include <cmath>

#include "qocr/simd/kernels.hpp"

namespace qocr::simd::detail {
namespace {

inline float64x2_t load1(const cplx* p) {
  return vld1q_f64(reinterpret_cast<const double*>(p));
}
inline void store1(cplx* p, float64x2_t v) {
  vst1q_f64(reinterpret_cast<double*>(p), v);
}

cplx inner(const cplx* a, const cplx* b, std::size_t n) {
  float64x2_t re_acc = vdupq_n_f64(0.0);
  float64x2_t im_acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t va = load1(a + i);
    const float64x2_t vb = load1(b + i);
    re_acc = vfmaq_f64(re_acc, va, vb);
    im_acc = vfmaq_f64(im_acc, va, vextq_f64(vb, vb, 1));
  }
  const double re = vgetq_lane_f64(re_acc, 0) + vgetq_lane_f64(re_acc, 1);
  const double im = vgetq_lane_f64(im_acc, 0) - vgetq_lane_f64(im_acc, 1);
  return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const float64x2_t ar = vdupq_n_f64(alpha.real());
  // (-ai, ai) so that swap(x) * ai_signed = (-ai*xi, ai*xr)
  const double ai_lanes[2] = {-alpha.imag(), alpha.imag()};
  const float64x2_t ai = vld1q_f64(ai_lanes);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = load1(x + i);
    float64x2_t acc = vfmaq_f64(load1(y + i), vx, ar);
    acc = vfmaq_f64(acc, vextq_f64(vx, vx, 1), ai);
    store1(y + i, acc);
  }
}

double norm_sq(const cplx* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = load1(a + i);
    acc = vfmaq_f64(acc, v, v);
  }
  return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

void abs_sq(const cplx* a, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = load1(a + i);
    out[i] = vaddvq_f64(vmulq_f64(v, v));
  }
}

void rotate(cplx* amp, std::size_t dim, unsigned qubit, double c, double s) {
  const std::size_t half = std::size_t{1} << qubit;
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  for (std::size_t base = 0; base < dim; base += 2 * half) {
    for (std::size_t k = 0; k < half; ++k) {
      cplx* p0 = amp + base + k;
      cplx* p1 = p0 + half;
      const float64x2_t a0 = load1(p0);
      const float64x2_t a1 = load1(p1);
      store1(p0, vfmsq_f64(vmulq_f64(vc, a0), vs, a1));
      store1(p1, vfmaq_f64(vmulq_f64(vc, a1), vs, a0));
    }
  }
}

double l1_distance(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vaddq_f64(acc, vabdq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += std::fabs(x[i] - y[i]);
  return total;
}

}  // namespace

const KernelTable neon_table{Isa::neon, "neon",  inner,  axpy,
                             norm_sq,   abs_sq,  rotate, l1_distance};

}  // namespace qocr::simd::detail
