#include "pblocks/structure.hpp"

namespace pblocks {

StructureConstants::StructureConstants(const FiniteGroup& group, const ClassData& classes)
    : k_(classes.count()), a_(k_ * k_ * k_, 0) {
  // Fix z in K_k; x in K_i contributes to a(i, class(x^-1 z), k).
  for (std::size_t k = 0; k < k_; ++k) {
    const Elem z = classes[k].representative;
    for (std::size_t i = 0; i < k_; ++i) {
      std::uint64_t* base = a_.data() + i * k_ * k_ + k;
      for (Elem x : classes[i].members) base[classes.class_of(group.mul(group.inv(x), z)) * k_] += 1;
    }
  }
}

}  // namespace pblocks
