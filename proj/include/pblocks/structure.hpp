#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pblocks/classes.hpp"

namespace pblocks {

/// Class-algebra structure constants: K_i^+ K_j^+ = sum_k a(i,j,k) K_k^+.
class StructureConstants {
 public:
  StructureConstants(const FiniteGroup& group, const ClassData& classes);

  std::size_t class_count() const { return k_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * k_ + j) * k_ + k]; }
  /// Row (i, j): the coefficients over k, contiguous.
  std::span<const std::uint64_t> row(std::size_t i, std::size_t j) const { return {a_.data() + (i * k_ + j) * k_, k_}; }

 private:
  std::size_t k_;
  std::vector<std::uint64_t> a_;
};

inline StructureConstants structure_constants(const FiniteGroup& group, const ClassData& classes) {
  return StructureConstants(group, classes);
}

}  // namespace pblocks
