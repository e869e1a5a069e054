#include "pblocks/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace pblocks {

namespace {

using Poly = std::vector<Integer>;

// Exact division of monic-divisor polynomials; remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    quot[i - dn] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw CyclotomicError("cyclotomic polynomial division left a remainder");
  return quot;
}

Poly compute_cyclotomic(unsigned e) {
  Poly poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (unsigned d = 1; d < e; ++d)
    if (e % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

void reduce_in_place(unsigned e, Poly& raw) {
  const auto& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > deg;) {
    if (raw[i] == 0) continue;
    Integer c = raw[i];
    for (std::size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= c * phi[j];
  }
  raw.resize(deg, 0);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw CyclotomicError("cyclotomic modulus must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const Poly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(e); it != cache.end()) return *it->second;
  }
  // Computed outside the lock (recursion); concurrent initializers agree, first insert wins.
  auto poly = std::make_shared<const Poly>(compute_cyclotomic(e));
  std::lock_guard lock(mutex);
  return *cache.try_emplace(e, std::move(poly)).first->second;
}

CycInt::CycInt(unsigned e) : e_(e) {
  if (e == 0) throw CyclotomicError("cyclotomic modulus must be positive");
  coeffs_.assign(euler_phi(e), 0);
}

CycInt CycInt::from_integer(unsigned e, const Integer& n) {
  CycInt r(e);
  r.coeffs_[0] = n;
  return r;
}

CycInt CycInt::root_power(unsigned e, std::int64_t k) {
  std::int64_t m = static_cast<std::int64_t>(e);
  std::vector<Integer> raw(e, 0);
  raw[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  return reduce(e, raw);
}

CycInt CycInt::reduce(unsigned e, std::span<const Integer> raw) {
  if (e == 0) throw CyclotomicError("cyclotomic modulus must be positive");
  Poly folded(e, 0);
  for (std::size_t i = 0; i < raw.size(); ++i) folded[i % e] += raw[i];
  reduce_in_place(e, folded);
  CycInt r(e);
  r.coeffs_ = std::move(folded);
  return r;
}

CycInt CycInt::from_coordinates(unsigned e, std::vector<Integer> coords) {
  CycInt r(e);
  if (coords.size() != r.coeffs_.size())
    throw CyclotomicError("expected " + std::to_string(r.coeffs_.size()) + " coordinates for e = " +
                          std::to_string(e) + ", got " + std::to_string(coords.size()));
  r.coeffs_ = std::move(coords);
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Integer> CycInt::as_rational_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

void CycInt::require_same_modulus(const CycInt& b) const {
  if (e_ != b.e_)
    throw CyclotomicError("modulus mismatch: " + std::to_string(e_) + " vs " + std::to_string(b.e_));
}

CycInt& CycInt::operator+=(const CycInt& b) {
  require_same_modulus(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& b) {
  require_same_modulus(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.require_same_modulus(b);
  const std::size_t n = a.coeffs_.size();
  Poly prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  reduce_in_place(a.e_, prod);
  CycInt r(a.e_);
  r.coeffs_ = std::move(prod);
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt CycInt::galois(std::int64_t k) const {
  const std::int64_t m = static_cast<std::int64_t>(e_);
  const std::int64_t kk = ((k % m) + m) % m;
  if (std::gcd(kk, m) != 1)
    throw CyclotomicError("galois exponent " + std::to_string(k) + " is not coprime to " + std::to_string(e_));
  Poly raw(e_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[(i * static_cast<std::size_t>(kk)) % e_] += coeffs_[i];
  return reduce(e_, raw);
}

CycInt CycInt::conj() const { return galois(static_cast<std::int64_t>(e_) - 1); }

CycInt CycInt::exact_div(const Integer& d) const {
  if (d == 0) throw CyclotomicError("division by zero");
  CycInt r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (r.coeffs_[i] % d != 0)
      throw CyclotomicError("coordinate " + std::to_string(i) + " of " + to_string() + " is not divisible by " +
                            d.str());
    r.coeffs_[i] /= d;
  }
  return r;
}

bool CycInt::lex_less(const CycInt& b) const {
  require_same_modulus(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != b.coeffs_[i]) return coeffs_[i] < b.coeffs_[i];
  return false;
}

std::complex<double> CycInt::approximate() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / e_;
    sum += coeffs_[i].convert_to<double>() * std::polar(1.0, angle);
  }
  return sum;
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "z" + std::to_string(e_);
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pblocks
