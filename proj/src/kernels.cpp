#include "pblocks/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace pblocks::simd {

namespace detail {
namespace {

void gather_add_scalar(std::uint64_t* out, const std::uint32_t* src, const std::uint32_t* idx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += src[idx[i]];
}

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t q,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % q);
}

std::uint32_t dot_mod_scalar(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t q, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = (acc + std::uint64_t{a[i]} * b[i]) % q;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, gather_add_scalar, axpy_mod_scalar, dot_mod_scalar};

}  // namespace detail

namespace {

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{&kernels_for(detected_isa())};
  return slot;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(PBLOCKS_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  if (const char* forced = std::getenv("PBLOCKS_ISA"); forced && std::string(forced) == "scalar") return Isa::scalar;
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) throw std::runtime_error("ISA " + std::string(isa_name(isa)) + " is not supported here");
#if defined(PBLOCKS_HAVE_AVX2_TU)
  if (isa == Isa::avx2) return detail::avx2_table;
#endif
  return detail::scalar_table;
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_release); }

}  // namespace pblocks::simd
