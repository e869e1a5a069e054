#include "pblocks/classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace pblocks {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // m is small here (a prime power dividing an element order)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    auto q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw PrimeError(std::to_string(p) + " is not prime");
}

}  // namespace

ClassData::ClassData(const FiniteGroup& group) : group_order_(group.order()) {
  const std::size_t n = group.order();
  std::vector<std::size_t> raw_class(n, SIZE_MAX);
  std::vector<ConjugacyClass> found;
  for (Elem x = 0; x < n; ++x) {
    if (raw_class[x] != SIZE_MAX) continue;
    ConjugacyClass c{x, {}, group.element_order(x), 0};
    for (Elem g = 0; g < n; ++g) {
      Elem y = group.mul(group.mul(group.inv(g), x), g);
      if (raw_class[y] == SIZE_MAX) {
        raw_class[y] = found.size();
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.centralizer_order = n / c.members.size();
    found.push_back(std::move(c));
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = found[a];
    const auto& cb = found[b];
    return std::tuple{ca.element_order, ca.size(), ca.representative} <
           std::tuple{cb.element_order, cb.size(), cb.representative};
  });
  std::vector<std::size_t> renumber(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;
  for (std::size_t i : order) classes_.push_back(std::move(found[i]));
  class_of_.resize(n);
  for (Elem x = 0; x < n; ++x) class_of_[x] = renumber[raw_class[x]];

  exponent_ = 1;
  for (const auto& c : classes_) exponent_ = std::lcm(exponent_, c.element_order);
  power_.resize(classes_.size() * exponent_);
  for (std::size_t j = 0; j < classes_.size(); ++j) {
    Elem x = 0;
    for (std::uint32_t s = 0; s < exponent_; ++s) {
      power_[j * exponent_ + s] = class_of_[x];
      x = group.mul(x, classes_[j].representative);
    }
  }
}

ElementSubset class_union(const ClassData& classes, std::vector<std::size_t> class_indices, std::string label) {
  ElementSubset s;
  s.class_closed = true;
  std::sort(class_indices.begin(), class_indices.end());
  class_indices.erase(std::unique(class_indices.begin(), class_indices.end()), class_indices.end());
  s.mask.assign(classes.group_order(), false);
  for (auto j : class_indices) {
    for (auto g : classes[j].members) s.mask[g] = true;
    s.size += classes[j].size();
  }
  s.class_indices = std::move(class_indices);
  s.label = std::move(label);
  return s;
}

ElementSubset arbitrary_subset(std::size_t group_order, std::span<const Elem> elements, std::string label) {
  ElementSubset s;
  s.mask.assign(group_order, false);
  for (auto g : elements) {
    if (g >= group_order) throw GroupError("subset element " + std::to_string(g) + " out of range");
    if (!s.mask[g]) ++s.size;
    s.mask[g] = true;
  }
  s.label = std::move(label);
  return s;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pi_part(std::uint64_t n, std::span<const std::uint64_t> primes) {
  std::uint64_t part = 1;
  for (auto p : primes) {
    if (p < 2) continue;
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

std::uint64_t pi_complement_part(std::uint64_t n, std::span<const std::uint64_t> primes) {
  return n / pi_part(n, primes);
}

void validate_primes(std::uint64_t group_order, std::span<const std::uint64_t> primes) {
  if (primes.empty()) throw PrimeError("at least one prime is required");
  std::set<std::uint64_t> seen;
  for (auto p : primes) {
    require_prime(p);
    if (!seen.insert(p).second) throw PrimeError("primes must be distinct");
    if (group_order % p != 0)
      throw PrimeError(std::to_string(p) + " does not divide the group order " + std::to_string(group_order));
  }
}

std::pair<std::uint64_t, std::uint64_t> p_part_exponents(std::uint64_t element_order, std::uint64_t p) {
  const std::uint64_t pk = pi_part(element_order, std::span(&p, 1));
  const std::uint64_t m = element_order / pk;
  // a = 1 mod p^k, a = 0 mod m; b = 1 - a
  const std::uint64_t a = pk == 1 ? 0 : (m * inverse_mod(m, pk)) % element_order;
  const std::uint64_t b = (element_order + 1 - a) % element_order;
  return {a, b};
}

PDecomposition p_decompose(const FiniteGroup& group, Elem g, std::uint64_t p) {
  require_prime(p);
  auto [a, b] = p_part_exponents(group.element_order(g), p);
  return {group.power(g, a), group.power(g, b)};
}

std::size_t p_part_class(const ClassData& classes, std::size_t j, std::uint64_t p) {
  return classes.power_class(j, p_part_exponents(classes[j].element_order, p).first);
}

ElementSubset p_regular_set(const ClassData& classes, std::uint64_t p) {
  require_prime(p);
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < classes.count(); ++j)
    if (classes[j].element_order % p != 0) chosen.push_back(j);
  return class_union(classes, std::move(chosen), "G_{" + std::to_string(p) + "'}");
}

std::vector<std::size_t> p_element_classes(const ClassData& classes, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < classes.count(); ++j)
    if (is_p_power(classes[j].element_order, p)) out.push_back(j);
  return out;
}

ElementSubset p_section(const ClassData& classes, std::uint64_t p, std::size_t z_class) {
  require_prime(p);
  if (z_class >= classes.count()) throw GroupError("class index " + std::to_string(z_class) + " out of range");
  if (!is_p_power(classes[z_class].element_order, p))
    throw PrimeError("section element of order " + std::to_string(classes[z_class].element_order) +
                     " is not a " + std::to_string(p) + "-element");
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < classes.count(); ++j)
    if (p_part_class(classes, j, p) == z_class) chosen.push_back(j);
  return class_union(classes, std::move(chosen),
                     "S_{" + std::to_string(p) + "}(K" + std::to_string(z_class) + ")");
}

ElementSubset p_section(const FiniteGroup& group, const ClassData& classes, std::uint64_t p, Elem z) {
  (void)group;
  return p_section(classes, p, classes.class_of(z));
}

bool central_in_some_sylow(const ClassData& classes, std::uint64_t p, std::size_t z_class) {
  require_prime(p);
  if (!is_p_power(classes[z_class].element_order, p))
    throw PrimeError("element of order " + std::to_string(classes[z_class].element_order) + " is not a " +
                     std::to_string(p) + "-element");
  auto prime = std::span(&p, 1);
  return pi_part(classes[z_class].centralizer_order, prime) == pi_part(classes.group_order(), prime);
}

bool central_in_some_sylow(const FiniteGroup& group, const ClassData& classes, std::uint64_t p, Elem z) {
  (void)group;
  return central_in_some_sylow(classes, p, classes.class_of(z));
}

SectionSpec make_section_spec(const FiniteGroup& group, const ClassData& classes, std::uint64_t p, Elem z) {
  return {p, z, classes.class_of(z), central_in_some_sylow(group, classes, p, z)};
}

}  // namespace pblocks
