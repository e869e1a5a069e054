#pragma once

// Exact zero tests in Z[zeta_e] by reduction modulo primes l = 1 (mod e).
//
// For such l, Z[zeta_e]/l is isomorphic to F_l^phi(e) via zeta -> w^t, t
// coprime to e, w a primitive e-th root of unity mod l. An element whose
// power-basis coordinates are bounded by B in absolute value is zero iff all
// its images vanish for a set of primes with product > 2B.

#include <cstdint>
#include <vector>

#include "pblocks/cyclotomic.hpp"

namespace pblocks::detail {

class ModularEmbedding {
 public:
  ModularEmbedding(unsigned e, std::uint32_t prime);

  std::uint32_t prime() const { return prime_; }
  /// Number of embeddings, phi(e).
  std::size_t count() const { return exponents_.size(); }
  /// Index of the embedding composed with complex conjugation.
  std::size_t conjugate_index(std::size_t t) const { return conj_[t]; }
  /// out[t] = image of x under embedding t.
  void images(const CycInt& x, std::uint32_t* out) const;

 private:
  unsigned e_;
  std::uint32_t prime_;
  std::vector<std::uint32_t> exponents_;
  std::vector<std::size_t> conj_;
  std::vector<std::uint32_t> powers_;  // powers_[t * phi + i] = w^(exponents_[t] * i)
};

/// Largest coordinate, in absolute value, of any reduced zeta^m.
Integer reduction_growth(unsigned e);

Integer l1_norm(const CycInt& x);

/// Distinct primes l = 1 (mod e) below the kernel modulus bound, largest first,
/// with product exceeding 2 * bound.
std::vector<std::uint32_t> embedding_primes(unsigned e, const Integer& bound);

}  // namespace pblocks::detail
