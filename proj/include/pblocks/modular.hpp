#pragma once

#include <cstdint>
#include <vector>

namespace pblocks::modq {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= q ? s - q : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t q) { return a >= b ? a - b : a + q - b; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % q);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t q);
/// q must be prime and a nonzero mod q.
std::uint32_t inv(std::uint32_t a, std::uint32_t q);
std::uint32_t reduce(std::uint64_t a, std::uint32_t q);

/// Dense row-major matrix over F_q.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::uint32_t* row(std::size_t i) { return data.data() + i * cols; }
  const std::uint32_t* row(std::size_t i) const { return data.data() + i * cols; }
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::uint32_t q);

/// Basis (as rows) of {x : m x = 0}.
Matrix nullspace(Matrix m, std::uint32_t q);

/// Characteristic polynomial det(xI - m), constant term first, via Hessenberg form.
std::vector<std::uint32_t> charpoly(Matrix m, std::uint32_t q);

/// Distinct roots in F_q, ascending, by exhaustive evaluation.
std::vector<std::uint32_t> roots(const std::vector<std::uint32_t>& poly, std::uint32_t q);

}  // namespace pblocks::modq
