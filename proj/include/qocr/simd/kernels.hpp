#pragma once
// Data-parallel inner loops shared by the statevector simulator and the
// image metrics. Each instruction set provides the same table of kernels;
// the scalar table is the reference every other table is tested against.

#include <complex>
#include <cstddef>
#include <string_view>

namespace qocr::simd {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  std::string_view name;

  // sum_i conj(a_i) * b_i
  cplx (*inner)(const cplx* a, const cplx* b, std::size_t n);
  // y_i += alpha * x_i
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // sum_i |a_i|^2
  double (*norm_sq)(const cplx* a, std::size_t n);
  // out_i = |a_i|^2
  void (*abs_sq)(const cplx* a, double* out, std::size_t n);
  // Real rotation [[c, -s], [s, c]] on one qubit of a 2^k amplitude array.
  // Bit `qubit` of the basis index selects the row.
  void (*rotate)(cplx* amp, std::size_t dim, unsigned qubit, double c, double s);
  // sum_i |x_i - y_i|
  double (*l1_distance)(const double* x, const double* y, std::size_t n);
};

// True when the table is compiled in and the running CPU supports it.
bool available(Isa isa) noexcept;

// Throws DomainError if `isa` is not available.
const KernelTable& kernels(Isa isa);

// Best available table, resolved once on first use.
const KernelTable& active() noexcept;

namespace detail {
extern const KernelTable scalar_table;
#if defined(QOCR_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(QOCR_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace qocr::simd
