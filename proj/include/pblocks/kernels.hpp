#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// ISA-specific variants chosen at runtime. Every variant must produce
// bit-identical results to the scalar path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pblocks::simd {

enum class Isa { scalar, avx2 };

/// Moduli for the mod-q kernels must stay below this bound.
inline constexpr std::uint32_t kMaxModulus = 1u << 26;

struct KernelTable {
  Isa isa;
  // out[i] += src[idx[i]]
  void (*gather_add)(std::uint64_t* out, const std::uint32_t* src, const std::uint32_t* idx, std::size_t n);
  // dst[i] = (dst[i] + factor * src[i]) mod q; all operands already reduced
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t q,
                   std::size_t n);
  // sum a[i] * b[i] mod q
  std::uint32_t (*dot_mod)(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t q, std::size_t n);
};

bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);
/// Best supported ISA, unless PBLOCKS_ISA=scalar is set in the environment.
Isa detected_isa();

const KernelTable& kernels_for(Isa isa);
const KernelTable& active_kernels();
void set_active_isa(Isa isa);

inline void gather_add(std::span<std::uint64_t> out, std::span<const std::uint32_t> src,
                       std::span<const std::uint32_t> idx) {
  active_kernels().gather_add(out.data(), src.data(), idx.data(), out.size());
}

inline void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                     std::uint32_t q) {
  active_kernels().axpy_mod(dst.data(), src.data(), factor, q, dst.size());
}

inline std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t q) {
  return active_kernels().dot_mod(a.data(), b.data(), q, a.size());
}

}  // namespace pblocks::simd
