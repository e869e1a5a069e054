#include "pblocks/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pblocks/kernels.hpp"

namespace pblocks::modq {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t q) {
  std::uint64_t result = 1 % q, base = a % q;
  while (e != 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t q) {
  if (a % q == 0) throw std::domain_error("inverse of zero mod " + std::to_string(q));
  return pow(a, q - 2, q);
}

std::uint32_t reduce(std::uint64_t a, std::uint32_t q) { return static_cast<std::uint32_t>(a % q); }

std::vector<std::size_t> rref(Matrix& m, std::uint32_t q) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) std::swap_ranges(m.row(p), m.row(p) + m.cols, m.row(r));
    const std::uint32_t scale = inv(m.at(r, c), q);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = mul(m.at(r, j), scale, q);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      // row_i -= m[i][c] * row_r
      simd::axpy_mod({m.row(i), m.cols}, {m.row(r), m.cols}, q - m.at(i, c), q);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix nullspace(Matrix m, std::uint32_t q) {
  auto pivots = rref(m, q);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(m.cols - pivots.size(), m.cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(out, pivots[r]) = sub(0, m.at(r, free), q);
    ++out;
  }
  return basis;
}

std::vector<std::uint32_t> charpoly(Matrix h, std::uint32_t q) {
  const std::size_t n = h.rows;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h.at(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap_ranges(h.row(i), h.row(i) + n, h.row(m));
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, i), h.at(r, m));
    }
    const std::uint32_t pivot_inv = inv(h.at(m, m - 1), q);
    for (std::size_t r = m + 1; r < n; ++r) {
      const std::uint32_t u = mul(h.at(r, m - 1), pivot_inv, q);
      if (u == 0) continue;
      simd::axpy_mod({h.row(r), n}, {h.row(m), n}, q - u, q);
      for (std::size_t c = 0; c < n; ++c) h.at(c, m) = add(h.at(c, m), mul(u, h.at(c, r), q), q);
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_i (prod of subdiagonal) h_{k-i,k} p_{k-i-1}(x)
  std::vector<std::vector<std::uint32_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> next(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = add(next[d + 1], p[k - 1][d], q);
      next[d] = sub(next[d], mul(h.at(k - 1, k - 1), p[k - 1][d], q), q);
    }
    std::uint32_t t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = mul(t, h.at(k - i, k - i - 1), q);
      const std::uint32_t coef = mul(t, h.at(k - i - 1, k - 1), q);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d)
        next[d] = sub(next[d], mul(coef, p[k - i - 1][d], q), q);
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint32_t> roots(const std::vector<std::uint32_t>& poly, std::uint32_t q) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = (acc * x + poly[d]) % q;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

}  // namespace pblocks::modq
