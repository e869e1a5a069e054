#include <map>
#include <random>

#include "catalog.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "pblocks/classes.hpp"
#include "pblocks/group_spec.hpp"
#include "pblocks/structure.hpp"

using namespace pblocks;

namespace {

oracle::Perm to_oracle(const FiniteGroup& g, Elem x) {
  auto p = g.permutation_of(x);
  REQUIRE(p);
  oracle::Perm out;
  for (auto img : p->images) out.push_back(static_cast<int>(img) - 1);
  return out;
}

std::multiset<std::size_t> library_class_sizes(const ClassData& c) {
  std::multiset<std::size_t> out;
  for (const auto& k : c.classes()) out.insert(k.size());
  return out;
}

}  // namespace

TEST_CASE("builtin orders and class counts") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"cyclic:7", {7, 7}},        {"dihedral:4", {8, 5}},   {"dihedral:5", {10, 4}}, {"dihedral:6", {12, 6}},
      {"symmetric:3", {6, 3}},     {"symmetric:4", {24, 5}}, {"alternating:4", {12, 4}},
      {"alternating:5", {60, 5}},  {"quaternion:8", {8, 5}}, {"sl23", {24, 7}},
      {"product:cyclic:2,cyclic:2", {4, 4}}, {"symmetric:5", {120, 7}}, {"dihedral:1", {2, 2}},
  };
  for (const auto& [name, oc] : expected) {
    CAPTURE(name);
    auto g = FiniteGroup::builtin(name);
    ClassData c(g);
    CHECK(g.order() == oc.first);
    CHECK(c.count() == oc.second);
  }
}

TEST_CASE("class sizes match exhaustive conjugation") {
  for (const char* name : {"symmetric:4", "alternating:5", "alternating:4", "dihedral:6", "quaternion:8", "sl23"}) {
    CAPTURE(name);
    auto g = FiniteGroup::builtin(name);
    std::vector<oracle::Perm> elements;
    for (Elem x = 0; x < g.order(); ++x) elements.push_back(to_oracle(g, x));
    ClassData c(g);
    CHECK(library_class_sizes(c) == oracle::class_sizes(elements));
    for (std::size_t j = 0; j < c.count(); ++j) {
      auto rep = to_oracle(g, c[j].representative);
      CHECK(c[j].element_order == static_cast<std::uint32_t>(oracle::order(rep)));
      CHECK(c[j].centralizer_order == oracle::centralizer_order(elements, rep));
    }
  }
}

TEST_CASE("multiplication composes left to right") {
  auto g = FiniteGroup::builtin("symmetric:4");
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Elem a = rng() % g.order(), b = rng() % g.order();
    CHECK(to_oracle(g, g.mul(a, b)) == oracle::compose(to_oracle(g, a), to_oracle(g, b)));
    CHECK(to_oracle(g, g.inv(a)) == oracle::inverse(to_oracle(g, a)));
  }
}

TEST_CASE("class ordering") {
  for (const auto& name : testing_catalog::catalog()) {
    auto g = FiniteGroup::builtin(name);
    ClassData c(g);
    CHECK(c[0].members == std::vector<Elem>{0});
    for (std::size_t j = 1; j < c.count(); ++j) {
      auto prev = std::tuple(c[j - 1].element_order, c[j - 1].size(), c[j - 1].representative);
      auto cur = std::tuple(c[j].element_order, c[j].size(), c[j].representative);
      CHECK(prev < cur);
    }
  }
}

TEST_CASE("cayley table validation") {
  std::vector<std::vector<std::int64_t>> c3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK(FiniteGroup::from_cayley_table(c3).order() == 3);

  auto bad_range = c3;
  bad_range[1][1] = 3;
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(bad_range), GroupError);

  auto bad_identity = c3;
  std::swap(bad_identity[0][1], bad_identity[0][2]);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table(bad_identity), GroupError);

  // a Latin square with identity 0 that is not associative
  std::vector<std::vector<std::int64_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_cayley_table(loop);
    FAIL("expected a GroupError");
  } catch (const GroupError& e) {
    CHECK(std::string(e.what()).find("witness triple") != std::string::npos);
  }
}

TEST_CASE("enumeration caps") {
  EnumerationLimits small;
  small.max_order = 100;
  CHECK_THROWS_AS(FiniteGroup::builtin("symmetric:5", small), GroupError);
  CHECK_THROWS_AS(FiniteGroup::builtin("symmetric:9"), GroupError);
  CHECK_THROWS_AS(FiniteGroup::builtin("nonsense:3"), GroupError);
  PermutationSpec big{70, {Permutation{std::vector<std::uint32_t>(70)}}};
  for (std::uint32_t i = 0; i < 70; ++i) big.generators[0].images[i] = (i + 1) % 70 + 1;
  CHECK_THROWS_AS(enumerate_group(big), GroupError);
}

TEST_CASE("hash is stable and table-sensitive") {
  auto a = FiniteGroup::builtin("symmetric:3");
  auto b = FiniteGroup::builtin("symmetric:3");
  CHECK(a.hash() == b.hash());
  CHECK(a.hash().rfind("fnv1a64:", 0) == 0);
  CHECK(a.hash() != FiniteGroup::builtin("cyclic:6").hash());
}

TEST_CASE("p-decomposition is the unique commuting split") {
  for (const auto& name : testing_catalog::catalog()) {
    auto g = FiniteGroup::builtin(name);
    if (g.order() > 24) continue;
    for (auto p : prime_divisors(g.order())) {
      for (Elem x = 0; x < g.order(); ++x) {
        auto d = p_decompose(g, x, p);
        CHECK(g.mul(d.p_part, d.p_regular_part) == x);
        CHECK(g.mul(d.p_part, d.p_regular_part) == g.mul(d.p_regular_part, d.p_part));
        CHECK(pi_part(g.element_order(d.p_part), std::span(&p, 1)) == g.element_order(d.p_part));
        CHECK(g.element_order(d.p_regular_part) % p != 0);
        // uniqueness over all pairs
        int splits = 0;
        for (Elem a = 0; a < g.order(); ++a) {
          if (pi_part(g.element_order(a), std::span(&p, 1)) != g.element_order(a)) continue;
          Elem b = g.mul(g.inv(a), x);
          if (g.element_order(b) % p != 0 && g.mul(a, b) == g.mul(b, a)) ++splits;
        }
        CHECK(splits == 1);
      }
    }
  }
}

TEST_CASE("p-part agrees with the search oracle") {
  auto g = FiniteGroup::builtin("alternating:5");
  for (std::uint64_t p : {2, 3, 5})
    for (Elem x = 0; x < g.order(); ++x) CHECK(to_oracle(g, p_decompose(g, x, p).p_part) == oracle::p_part(to_oracle(g, x), int(p)));
}

TEST_CASE("p-regular sets by element-order census") {
  auto a5 = FiniteGroup::builtin("alternating:5");
  ClassData c(a5);
  std::map<std::uint64_t, std::size_t> census;
  for (std::uint64_t p : {2, 3, 5}) {
    std::size_t n = 0;
    for (Elem x = 0; x < a5.order(); ++x) n += a5.element_order(x) % p != 0;
    census[p] = n;
    CHECK(p_regular_set(c, p).size == n);
    CHECK(p_regular_set(c, p).label == "G_{" + std::to_string(p) + "'}");
  }
  CHECK(census == std::map<std::uint64_t, std::size_t>{{2, 45}, {3, 40}, {5, 36}});
}

TEST_CASE("sections partition the group") {
  auto s4 = FiniteGroup::builtin("symmetric:4");
  ClassData c(s4);
  std::vector<std::size_t> sizes;
  for (auto z : p_element_classes(c, 2)) sizes.push_back(p_section(c, 2, z).size);
  CHECK(sizes == std::vector<std::size_t>{9, 3, 6, 6});

  for (const auto& name : testing_catalog::catalog()) {
    auto g = FiniteGroup::builtin(name);
    ClassData cl(g);
    for (auto p : prime_divisors(g.order())) {
      std::vector<int> hits(g.order(), 0);
      for (auto z : p_element_classes(cl, p)) {
        auto s = p_section(cl, p, z);
        CHECK(s.class_closed);
        for (Elem x = 0; x < g.order(); ++x) hits[x] += s.contains(x);
      }
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      CHECK(p_section(cl, p, 0).mask == p_regular_set(cl, p).mask);
    }
  }
}

TEST_CASE("central in some Sylow subgroup") {
  auto s4 = FiniteGroup::builtin("symmetric:4");
  ClassData c(s4);
  auto find = [&](std::vector<std::vector<int>> cycles) {
    auto target = oracle::from_cycles(4, cycles);
    for (Elem x = 0; x < s4.order(); ++x)
      if (to_oracle(s4, x) == target) return x;
    FAIL("not found");
    return Elem{0};
  };
  CHECK(central_in_some_sylow(s4, c, 2, find({{1, 2}, {3, 4}})));
  CHECK_FALSE(central_in_some_sylow(s4, c, 2, find({{1, 2, 3, 4}})));
  CHECK(central_in_some_sylow(s4, c, 3, find({{1, 2, 3}})));
  CHECK_FALSE(central_in_some_sylow(s4, c, 2, find({{1, 2}})));
  CHECK(central_in_some_sylow(s4, c, 2, 0));

  auto spec = make_section_spec(s4, c, 2, find({{1, 2, 3, 4}}));
  CHECK_FALSE(spec.central_valid);
}

TEST_CASE("structure constants") {
  auto s3 = FiniteGroup::builtin("symmetric:3");
  ClassData c(s3);
  StructureConstants sc(s3, c);
  // classes: e, transpositions, 3-cycles
  CHECK(sc(1, 1, 0) == 3);
  CHECK(sc(1, 1, 2) == 3);
  CHECK(sc(2, 2, 0) == 2);
  CHECK(sc(2, 2, 2) == 1);
  CHECK(sc(1, 2, 1) == 2);

  for (const auto& name : testing_catalog::catalog()) {
    auto g = FiniteGroup::builtin(name);
    ClassData cl(g);
    StructureConstants a(g, cl);
    const auto k = cl.count();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t mass = 0;
        for (std::size_t l = 0; l < k; ++l) {
          CHECK(a(i, j, l) == a(j, i, l));
          mass += a(i, j, l) * cl[l].size();
        }
        CHECK(mass == cl[i].size() * cl[j].size());
        CHECK(a(i, j, 0) == (j == cl.inverse_class(i) ? cl[i].size() : 0));
      }
  }
}

TEST_CASE("prime helpers") {
  CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
  std::vector<std::uint64_t> pi{2, 5};
  CHECK(pi_part(120, pi) == 40);
  CHECK(pi_complement_part(120, pi) == 3);
  CHECK(pi_complement_part(60, std::vector<std::uint64_t>{2, 3, 5}) == 1);
  CHECK_THROWS_WITH_AS(validate_primes(60, std::vector<std::uint64_t>{2, 2}), "primes must be distinct", PrimeError);
  CHECK_THROWS_AS(validate_primes(60, std::vector<std::uint64_t>{7}), PrimeError);
  CHECK_THROWS_AS(validate_primes(60, std::vector<std::uint64_t>{4}), PrimeError);
}

TEST_CASE("power classes") {
  auto a5 = FiniteGroup::builtin("alternating:5");
  ClassData c(a5);
  for (std::size_t j = 0; j < c.count(); ++j)
    for (std::uint64_t s = 0; s < 2 * c.exponent(); ++s)
      CHECK(c.power_class(j, s) == c.class_of(a5.power(c[j].representative, s)));
  CHECK(c.exponent() == 30);
}
