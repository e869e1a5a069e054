#include "embedding.hpp"

#include <algorithm>
#include <numeric>

#include "pblocks/classes.hpp"
#include "pblocks/kernels.hpp"
#include "pblocks/modular.hpp"

namespace pblocks::detail {

namespace {

std::uint32_t primitive_root_of_unity(unsigned e, std::uint32_t prime) {
  const auto factors = prime_divisors(e);
  for (std::uint32_t a = 2; a < prime; ++a) {
    const std::uint32_t w = modq::pow(a, (prime - 1) / e, prime);
    bool primitive = true;
    for (auto p : factors) primitive = primitive && modq::pow(w, e / p, prime) != 1;
    if (primitive) return w;
  }
  throw CyclotomicError("no primitive " + std::to_string(e) + "-th root of unity modulo " + std::to_string(prime));
}

}  // namespace

ModularEmbedding::ModularEmbedding(unsigned e, std::uint32_t prime) : e_(e), prime_(prime) {
  if (e == 0 || (prime - 1) % e != 0) throw CyclotomicError("embedding prime must be 1 mod e");
  const std::uint32_t w = e == 1 ? 1 : primitive_root_of_unity(e, prime);
  for (unsigned t = 1; t <= e; ++t)
    if (std::gcd(t, e) == 1) exponents_.push_back(t % e);
  const std::size_t phi = exponents_.size();
  conj_.resize(phi);
  for (std::size_t t = 0; t < phi; ++t) {
    const std::uint32_t neg = (e - exponents_[t]) % e;
    conj_[t] = static_cast<std::size_t>(std::find(exponents_.begin(), exponents_.end(), neg) - exponents_.begin());
  }
  powers_.resize(phi * phi);
  for (std::size_t t = 0; t < phi; ++t) {
    const std::uint32_t base = modq::pow(w, exponents_[t], prime);
    std::uint32_t x = 1;
    for (std::size_t i = 0; i < phi; ++i) {
      powers_[t * phi + i] = x;
      x = modq::mul(x, base, prime);
    }
  }
}

void ModularEmbedding::images(const CycInt& x, std::uint32_t* out) const {
  const std::size_t phi = count();
  const auto& coords = x.coordinates();
  std::vector<std::uint32_t> residues(phi);
  const Integer p = prime_;
  for (std::size_t i = 0; i < phi; ++i) {
    if (coords[i] == 0) continue;
    Integer r = coords[i] % p;
    if (r < 0) r += p;
    residues[i] = static_cast<std::uint32_t>(r);
  }
  for (std::size_t t = 0; t < phi; ++t)
    out[t] = simd::dot_mod(residues, std::span(powers_.data() + t * phi, phi), prime_);
}

Integer reduction_growth(unsigned e) {
  Integer worst = 0;
  for (unsigned m = 0; m < e; ++m) {
    const CycInt power = CycInt::root_power(e, m);
    for (const auto& c : power.coordinates()) worst = std::max(worst, Integer(abs(c)));
  }
  return worst;
}

Integer l1_norm(const CycInt& x) {
  Integer s = 0;
  for (const auto& c : x.coordinates()) s += abs(c);
  return s;
}

std::vector<std::uint32_t> embedding_primes(unsigned e, const Integer& bound) {
  std::vector<std::uint32_t> primes;
  Integer product = 1;
  const Integer target = 2 * bound;
  for (std::uint64_t l = (simd::kMaxModulus - 1) / e * e + 1; l > e && product <= target; l -= e) {
    if (l >= simd::kMaxModulus || !is_prime(l)) continue;
    primes.push_back(static_cast<std::uint32_t>(l));
    product *= l;
  }
  if (product <= target) throw CyclotomicError("not enough embedding primes for e = " + std::to_string(e));
  return primes;
}

}  // namespace pblocks::detail
