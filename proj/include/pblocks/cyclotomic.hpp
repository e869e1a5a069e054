#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pblocks {

using Integer = boost::multiprecision::cpp_int;

class CyclotomicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned euler_phi(unsigned n);

/// Coefficients of the e-th cyclotomic polynomial, constant term first. Cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned e);

/// An element of Z[zeta_e], in coordinates over the power basis
/// 1, zeta, ..., zeta^(phi(e)-1) of Z[x]/(Phi_e). Equal values have equal
/// coordinates.
class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(unsigned e);

  static CycInt from_integer(unsigned e, const Integer& n);
  /// zeta_e^k
  static CycInt root_power(unsigned e, std::int64_t k);
  /// Reduces sum raw[i] * zeta^i (any length; exponents taken mod e).
  static CycInt reduce(unsigned e, std::span<const Integer> raw);
  /// Takes canonical coordinates as-is; the length must be phi(e).
  static CycInt from_coordinates(unsigned e, std::vector<Integer> coords);

  unsigned modulus() const { return e_; }
  const std::vector<Integer>& coordinates() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Integer> as_rational_integer() const;

  CycInt& operator+=(const CycInt& b);
  CycInt& operator-=(const CycInt& b);
  CycInt& operator*=(const Integer& k);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const Integer& k) { return a *= k; }
  CycInt operator-() const;
  bool operator==(const CycInt& b) const = default;

  /// Complex conjugation zeta -> zeta^(e-1).
  CycInt conj() const;
  /// zeta -> zeta^k; requires gcd(k, e) = 1.
  CycInt galois(std::int64_t k) const;
  /// Throws CyclotomicError unless every coordinate is divisible by d.
  CycInt exact_div(const Integer& d) const;

  /// Lexicographic order on coordinates; used only for deterministic sorting.
  bool lex_less(const CycInt& b) const;

  /// Embedding with zeta_e = exp(2 pi i / e). Display only.
  std::complex<double> approximate() const;
  std::string to_string() const;

 private:
  void require_same_modulus(const CycInt& b) const;

  unsigned e_;
  std::vector<Integer> coeffs_;
};

}  // namespace pblocks
