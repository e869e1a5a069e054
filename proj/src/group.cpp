#include "pblocks/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <numeric>
#include <unordered_map>

namespace pblocks {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw GroupError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::uint32_t> cycle) {
  Permutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 1u);
  std::vector<std::uint32_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p.images[c[i] - 1] = c[(i + 1) % c.size()];
  return p;
}

Permutation long_cycle(std::size_t degree) {
  Permutation p;
  p.images.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images[i] = static_cast<std::uint32_t>((i + 1) % degree + 1);
  return p;
}

// Splits "A,B" at the first top-level comma; parentheses group nested specs.
std::pair<std::string_view, std::string_view> split_product(std::string_view args) {
  int depth = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == '(') ++depth;
    else if (args[i] == ')') --depth;
    else if (args[i] == ',' && depth == 0) return {args.substr(0, i), args.substr(i + 1)};
  }
  throw GroupError("product needs two comma-separated factors: '" + std::string(args) + "'");
}

std::string_view strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

FiniteGroup dihedral_small(std::size_t n, EnumerationLimits limits) {
  // r^i s^j -> index i + n*j; (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
  std::size_t order = 2 * n;
  std::vector<std::vector<std::int64_t>> table(order, std::vector<std::int64_t>(order));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      table[x][y] = static_cast<std::int64_t>(rot + n * ((b + d) % 2));
    }
  }
  return FiniteGroup::from_cayley_table(table, limits);
}

FiniteGroup sl23() {
  // Natural action on the eight non-zero vectors of F_3^2.
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 0 || y != 0) vecs.emplace_back(x, y);
  auto index_of = [&](int x, int y) {
    auto it = std::find(vecs.begin(), vecs.end(), std::pair{x % 3, y % 3});
    return static_cast<std::uint32_t>(it - vecs.begin()) + 1;
  };
  auto from_matrix = [&](int a, int b, int c, int d) {
    Permutation p;
    for (auto [x, y] : vecs) p.images.push_back(index_of(a * x + b * y, c * x + d * y));
    return p;
  };
  return FiniteGroup::from_permutations(8, {from_matrix(1, 1, 0, 1), from_matrix(1, 0, 1, 1)});
}

}  // namespace

void Permutation::validate() const {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x < 1 || x > images.size() || seen[x - 1])
      throw GroupError("permutation images are not a bijection on 1.." + std::to_string(images.size()));
    seen[x - 1] = true;
  }
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                           EnumerationLimits limits) {
  if (degree == 0) throw GroupError("permutation degree must be positive");
  if (degree > limits.max_degree)
    throw GroupError("permutation degree " + std::to_string(degree) + " exceeds cap " +
                     std::to_string(limits.max_degree));
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw GroupError("generator has degree " + std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree));
    g.validate();
    std::vector<std::uint32_t> zero_based(degree);
    for (std::size_t i = 0; i < degree; ++i) zero_based[i] = g.images[i] - 1;
    gens.push_back(std::move(zero_based));
  }

  std::vector<std::vector<std::uint32_t>> elements;
  std::unordered_map<std::vector<std::uint32_t>, Elem, ImagesHash> index;
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> parent_gen{0};
  std::vector<Elem> right_gen;  // right_gen[x * ngens + i] = x * gen_i

  std::vector<std::uint32_t> identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  index.emplace(identity, 0);
  elements.push_back(std::move(identity));

  const std::size_t ngens = gens.size();
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t gi = 0; gi < ngens; ++gi) {
      std::vector<std::uint32_t> prod(degree);
      for (std::size_t pt = 0; pt < degree; ++pt) prod[pt] = gens[gi][elements[x][pt]];
      auto [it, inserted] = index.try_emplace(prod, static_cast<Elem>(elements.size()));
      if (inserted) {
        if (elements.size() + 1 > limits.max_order)
          throw GroupError("group order exceeds cap " + std::to_string(limits.max_order));
        elements.push_back(std::move(prod));
        parent.push_back(static_cast<Elem>(x));
        parent_gen.push_back(static_cast<std::uint32_t>(gi));
      }
      right_gen.push_back(it->second);
    }
  }

  FiniteGroup g;
  g.order_ = elements.size();
  g.source_ = GroupSource::permutation;
  g.table_.resize(g.order_ * g.order_);
  const std::size_t n = g.order_;
  // b = parent(b) * gen(b), so a*b = (a*parent(b)) * gen(b); BFS order makes parents available.
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = g.table_.data() + a * n;
    row[0] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right_gen[std::size_t{row[parent[b]]} * ngens + parent_gen[b]];
  }
  g.perm_degree_ = degree;
  g.perm_images_.reserve(n * degree);
  for (const auto& e : elements) g.perm_images_.insert(g.perm_images_.end(), e.begin(), e.end());
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                                           EnumerationLimits limits) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError("cayley table is empty");
  if (n > limits.max_order)
    throw GroupError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_order));
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw GroupError("cayley table row " + std::to_string(a) + " has length " + std::to_string(table[a].size()) +
                       ", expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      auto v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw GroupError("cayley table entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      g.table_[a * n + b] = static_cast<Elem>(v);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul(0, static_cast<Elem>(a)) != a || g.mul(static_cast<Elem>(a), 0) != a)
      throw GroupError("element 0 is not the identity (witness " + std::to_string(a) + ")");
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0;
    if (!has_inverse) throw GroupError("element " + std::to_string(a) + " has no inverse");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw GroupError("cayley table is not associative (witness triple " + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  g.source_ = GroupSource::cayley;
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b, EnumerationLimits limits) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > limits.max_order)
    throw GroupError("group order " + std::to_string(na * nb) + " exceeds cap " + std::to_string(limits.max_order));
  FiniteGroup g;
  g.order_ = na * nb;
  g.table_.resize(g.order_ * g.order_);
  for (std::size_t x = 0; x < g.order_; ++x)
    for (std::size_t y = 0; y < g.order_; ++y) {
      Elem p = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      Elem q = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      g.table_[x * g.order_ + y] = static_cast<Elem>(std::size_t{p} * nb + q);
    }
  if (a.perm_degree_ && b.perm_degree_ && *a.perm_degree_ + *b.perm_degree_ <= limits.max_degree) {
    const std::size_t da = *a.perm_degree_, db = *b.perm_degree_;
    g.perm_degree_ = da + db;
    g.perm_images_.reserve(g.order_ * (da + db));
    for (std::size_t x = 0; x < g.order_; ++x) {
      const auto* pa = a.perm_images_.data() + (x / nb) * da;
      const auto* pb = b.perm_images_.data() + (x % nb) * db;
      g.perm_images_.insert(g.perm_images_.end(), pa, pa + da);
      for (std::size_t i = 0; i < db; ++i) g.perm_images_.push_back(static_cast<std::uint32_t>(pb[i] + da));
    }
  }
  g.source_ = GroupSource::builtin;
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::builtin(std::string_view name, EnumerationLimits limits) {
  if (name.starts_with("builtin:")) name.remove_prefix(8);
  auto colon = name.find(':');
  std::string_view family = name.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);

  FiniteGroup g;
  if (family == "cyclic") {
    auto n = parse_size(arg, "cyclic order");
    if (n == 0) throw GroupError("cyclic order must be positive");
    if (n > limits.max_order) throw GroupError("group order exceeds cap " + std::to_string(limits.max_order));
    if (n > limits.max_degree) {
      // Too wide for a permutation representation; the addition table needs no axiom check.
      g.order_ = n;
      g.table_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = static_cast<Elem>((i + j) % n);
      g.finish();
    } else {
      g = from_permutations(n, n == 1 ? std::vector<Permutation>{} : std::vector{long_cycle(n)}, limits);
    }
  } else if (family == "dihedral") {
    auto n = parse_size(arg, "dihedral parameter");
    if (n == 0) throw GroupError("dihedral parameter must be positive");
    if (2 * n > limits.max_order) throw GroupError("group order exceeds cap " + std::to_string(limits.max_order));
    if (n < 3) {
      g = dihedral_small(n, limits);
    } else {
      Permutation reflection;
      for (std::size_t i = 0; i < n; ++i) reflection.images.push_back(static_cast<std::uint32_t>(n - i));
      g = from_permutations(n, {long_cycle(n), reflection}, limits);
    }
  } else if (family == "symmetric" || family == "alternating") {
    auto n = parse_size(arg, family == "symmetric" ? "symmetric degree" : "alternating degree");
    if (n == 0 || n > 6) throw GroupError(std::string(family) + " degree must be in 1..6");
    std::vector<Permutation> gens;
    if (family == "symmetric") {
      if (n >= 2) gens = {cycle_perm(n, {1, 2}), long_cycle(n)};
    } else {
      for (std::uint32_t k = 3; k <= n; ++k) gens.push_back(cycle_perm(n, {1, 2, k}));
    }
    g = from_permutations(n, gens, limits);
  } else if (family == "quaternion") {
    if (parse_size(arg, "quaternion order") != 8) throw GroupError("only quaternion:8 is built in");
    g = from_permutations(8, {Permutation{{2, 3, 4, 1, 6, 7, 8, 5}}, Permutation{{5, 8, 7, 6, 3, 2, 1, 4}}}, limits);
  } else if (family == "sl23" && arg.empty()) {
    g = sl23();
  } else if (family == "product") {
    auto [lhs, rhs] = split_product(arg);
    g = direct_product(builtin(strip_parens(lhs), limits), builtin(strip_parens(rhs), limits), limits);
  } else {
    throw GroupError("unknown builtin group '" + std::string(name) + "'");
  }
  g.source_ = GroupSource::builtin;
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = order_;
  inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    auto r = row(a);
    auto it = std::find(r.begin(), r.end(), Elem{0});
    inverse_[a] = static_cast<Elem>(it - r.begin());
  }
  element_order_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    element_order_[a] = k;
  }
}

Elem FiniteGroup::power(Elem a, std::uint64_t s) const {
  s %= element_order_[a];
  Elem result = 0;
  Elem base = a;
  while (s != 0) {
    if (s & 1) result = mul(result, base);
    base = mul(base, base);
    s >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Permutation> FiniteGroup::permutation_of(Elem a) const {
  if (!perm_degree_) return std::nullopt;
  Permutation p;
  const auto d = *perm_degree_;
  for (std::size_t i = 0; i < d; ++i) p.images.push_back(perm_images_[std::size_t{a} * d + i] + 1);
  return p;
}

std::optional<Elem> FiniteGroup::find_permutation(const Permutation& p) const {
  if (!perm_degree_ || p.degree() != *perm_degree_) return std::nullopt;
  const auto d = *perm_degree_;
  for (std::size_t a = 0; a < order_; ++a) {
    bool same = true;
    for (std::size_t i = 0; i < d && same; ++i) same = perm_images_[a * d + i] + 1 == p.images[i];
    if (same) return static_cast<Elem>(a);
  }
  return std::nullopt;
}

std::string FiniteGroup::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](std::uint32_t v) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  feed(static_cast<std::uint32_t>(order_));
  for (auto v : table_) feed(v);
  static constexpr char digits[] = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += digits[(h >> shift) & 0xf];
  return out;
}

}  // namespace pblocks
