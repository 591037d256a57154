// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "qocr/simd/kernels.hpp"

namespace qocr::simd::detail {
namespace {

// Two complex<double> per __m256d: (re0, im0, re1, im1).
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}
inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx inner(const cplx* a, const cplx* b, std::size_t n) {
  // re_acc lanes hold ar*br, ai*bi; im_acc lanes hold ar*bi, ai*br.
  __m256d re_acc = _mm256_setzero_pd();
  __m256d im_acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = load2(a + i);
    const __m256d vb = load2(b + i);
    re_acc = _mm256_fmadd_pd(va, vb, re_acc);
    im_acc = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), im_acc);
  }
  alignas(32) double im_lanes[4];
  _mm256_store_pd(im_lanes, im_acc);
  double re = hsum(re_acc);
  double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = load2(x + i);
    const __m256d t1 = _mm256_mul_pd(vx, ar);
    const __m256d t2 = _mm256_mul_pd(_mm256_permute_pd(vx, 0b0101), ai);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    store2(y + i, _mm256_add_pd(load2(y + i), _mm256_addsub_pd(t1, t2)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double norm_sq(const cplx* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load2(a + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += std::norm(a[i]);
  return total;
}

void abs_sq(const cplx* a, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = load2(a + i);
    const __m256d v1 = load2(a + i + 2);
    // hadd gives (|a0|^2, |a2|^2, |a1|^2, |a3|^2)
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0b11011000));
  }
  for (; i < n; ++i) out[i] = std::norm(a[i]);
}

void rotate(cplx* amp, std::size_t dim, unsigned qubit, double c, double s) {
  const std::size_t half = std::size_t{1} << qubit;
  if (half < 2) {
    for (std::size_t base = 0; base < dim; base += 2) {
      const cplx a0 = amp[base];
      const cplx a1 = amp[base + 1];
      amp[base] = c * a0 - s * a1;
      amp[base + 1] = s * a0 + c * a1;
    }
    return;
  }
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  for (std::size_t base = 0; base < dim; base += 2 * half) {
    for (std::size_t k = 0; k < half; k += 2) {
      cplx* p0 = amp + base + k;
      cplx* p1 = p0 + half;
      const __m256d a0 = load2(p0);
      const __m256d a1 = load2(p1);
      store2(p0, _mm256_fnmadd_pd(vs, a1, _mm256_mul_pd(vc, a0)));
      store2(p1, _mm256_fmadd_pd(vs, a0, _mm256_mul_pd(vc, a1)));
    }
  }
}

double l1_distance(const double* x, const double* y, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, d));
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += std::fabs(x[i] - y[i]);
  return total;
}

}  // namespace

const KernelTable avx2_table{Isa::avx2, "avx2",  inner,  axpy,
                             norm_sq,   abs_sq,  rotate, l1_distance};

}  // namespace qocr::simd::detail
