#include <string>

#include "qocr/error.hpp"
#include "qocr/simd/kernels.hpp"

namespace qocr::simd {

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(QOCR_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(QOCR_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!available(isa)) {
    throw DomainError("kernel table not available on this build/CPU: " +
                      std::to_string(static_cast<int>(isa)));
  }
  switch (isa) {
#if defined(QOCR_HAVE_AVX2)
    case Isa::avx2:
      return detail::avx2_table;
#endif
#if defined(QOCR_HAVE_NEON)
    case Isa::neon:
      return detail::neon_table;
#endif
    default:
      return detail::scalar_table;
  }
}

const KernelTable& active() noexcept {
  static const KernelTable& table = [] () -> const KernelTable& {
    if (available(Isa::avx2)) return kernels(Isa::avx2);
    if (available(Isa::neon)) return kernels(Isa::neon);
    return detail::scalar_table;
  }();
  return table;
}

}  // namespace qocr::simd
