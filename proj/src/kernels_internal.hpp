#pragma once

#include "pblocks/kernels.hpp"

namespace pblocks::simd::detail {

extern const KernelTable scalar_table;
#if defined(PBLOCKS_HAVE_AVX2_TU)
extern const KernelTable avx2_table;
#endif

}  // namespace pblocks::simd::detail
