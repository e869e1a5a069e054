#include <complex>

#include "catalog.hpp"
#include "doctest.h"
#include "pblocks/chartable.hpp"
#include "pblocks/group_spec.hpp"

using namespace pblocks;

namespace {

struct Built {
  FiniteGroup group;
  ClassData classes;
  StructureConstants sc;
  CharacterTable table;
};

Built build(const std::string& name) {
  auto g = FiniteGroup::builtin(name);
  ClassData c(g);
  StructureConstants sc(g, c);
  auto t = dixon_schneider(g, c, sc);
  return {std::move(g), std::move(c), std::move(sc), std::move(t)};
}

std::vector<std::vector<std::complex<double>>> numeric(const CharacterTable& t) {
  std::vector<std::vector<std::complex<double>>> out;
  for (const auto& chi : t.characters()) {
    out.emplace_back();
    for (const auto& v : chi.values) out.back().push_back(v.approximate());
  }
  return out;
}

CycInt z(unsigned e, std::int64_t k) { return CycInt::root_power(e, k); }
CycInt n(unsigned e, int v) { return CycInt::from_integer(e, v); }

}  // namespace

TEST_CASE("modulus choice") {
  CHECK(choose_modulus(6, 6) == ModulusChoice{7, 3});
  CHECK(choose_modulus(2, 2).q == 3);
  CHECK(choose_modulus(30, 60) == ModulusChoice{31, 3});
  // q > 2 floor(sqrt(24)) = 8 and q = 1 mod 12
  CHECK(choose_modulus(12, 24).q == 13);
  CHECK(choose_modulus(4, 8).q == 5);
  CHECK_THROWS_AS(choose_modulus(30, 60, 20), CharacterTableError);
}

TEST_CASE("S3 table") {
  auto b = build("symmetric:3");
  const unsigned e = 6;
  std::vector<Character> expected = {
      {1, {n(e, 1), n(e, 1), n(e, 1)}},
      {1, {n(e, 1), n(e, -1), n(e, 1)}},
      {2, {n(e, 2), n(e, 0), n(e, -1)}},
  };
  CHECK(b.table.characters() == expected);
  CHECK(b.table.modulus() == ModulusChoice{7, 3});
}

TEST_CASE("C4 table matches the abelian construction") {
  auto b = build("cyclic:4");
  REQUIRE(b.table.size() == 4);
  auto abelian = abelian_character_table(b.group, b.classes);
  CHECK(abelian.characters() == b.table.characters());
  // the faithful characters take the values +-i on generators
  int faithful = 0;
  for (const auto& chi : b.table.characters())
    for (const auto& v : chi.values) faithful += v == z(4, 1) || v == z(4, 3);
  CHECK(faithful == 4);
}

TEST_CASE("A5 table") {
  auto b = build("alternating:5");
  std::vector<std::uint64_t> degrees;
  for (const auto& chi : b.table.characters()) degrees.push_back(chi.degree);
  CHECK(degrees == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
  const unsigned e = 30;
  auto phi_plus = n(e, 1) + z(e, 6) + z(e, 24);
  auto phi_minus = n(e, 1) + z(e, 12) + z(e, 18);
  for (std::size_t chi : {1u, 2u}) {
    CHECK(b.table[chi].values[1] == n(e, -1));
    CHECK(b.table[chi].values[2] == n(e, 0));
    auto pair = std::pair(b.table[chi].values[3], b.table[chi].values[4]);
    CHECK((pair == std::pair(phi_plus, phi_minus) || pair == std::pair(phi_minus, phi_plus)));
  }
  CHECK(b.table[1].values[3] != b.table[2].values[3]);
  CHECK(std::abs(phi_plus.approximate() - std::complex<double>((1 + std::sqrt(5.0)) / 2)) < 1e-12);
}

TEST_CASE("catalog tables satisfy numeric orthogonality") {
  for (const auto& name : testing_catalog::catalog()) {
    CAPTURE(name);
    auto b = build(name);
    auto x = numeric(b.table);
    const auto k = b.classes.count();
    REQUIRE(x.size() == k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t c = 0; c < k; ++c) {
        std::complex<double> s = 0;
        for (std::size_t j = 0; j < k; ++j) s += double(b.classes[j].size()) * x[a][j] * std::conj(x[c][j]);
        CHECK(std::abs(s - (a == c ? double(b.group.order()) : 0.0)) < 1e-8);
      }
    CHECK(verify_table(b.table, b.sc).ok);
  }
}

TEST_CASE("abelian oracle agrees on every abelian catalog group") {
  for (const auto& name : testing_catalog::catalog()) {
    auto g = FiniteGroup::builtin(name);
    if (!g.is_abelian()) continue;
    CAPTURE(name);
    ClassData c(g);
    StructureConstants sc(g, c);
    CHECK(abelian_character_table(g, c).characters() == dixon_schneider(g, c, sc).characters());
  }
  auto s3 = FiniteGroup::builtin("symmetric:3");
  CHECK_THROWS_AS(abelian_character_table(s3, ClassData(s3)), CharacterTableError);
}

TEST_CASE("natural permutation character decomposes") {
  // fixed-point counts computed from the permutation images, not from the table
  for (const char* name : {"symmetric:4", "alternating:5", "alternating:4", "sl23"}) {
    CAPTURE(name);
    auto b = build(name);
    const auto k = b.classes.count();
    const unsigned e = b.table.exponent();
    std::vector<int> fixed(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto p = *b.group.permutation_of(b.classes[j].representative);
      for (std::size_t i = 0; i < p.degree(); ++i) fixed[j] += p.images[i] == i + 1;
    }
    std::vector<Integer> mult;
    for (const auto& chi : b.table.characters()) {
      CycInt s(e);
      for (std::size_t j = 0; j < k; ++j) s += chi.values[j].conj() * Integer(fixed[j] * int(b.classes[j].size()));
      auto m = s.exact_div(b.group.order()).as_rational_integer();
      REQUIRE(m);
      CHECK(*m >= 0);
      mult.push_back(*m);
    }
    CHECK(mult[0] == 1);
  }
}

TEST_CASE("galois stability") {
  for (const char* name : {"alternating:5", "sl23", "cyclic:12", "dihedral:5"}) {
    CAPTURE(name);
    auto b = build(name);
    const unsigned e = b.table.exponent();
    for (unsigned s = 1; s < e; ++s) {
      if (std::gcd(s, e) != 1) continue;
      for (const auto& chi : b.table.characters()) {
        std::vector<CycInt> image;
        for (const auto& v : chi.values) image.push_back(v.galois(s));
        bool found = false;
        for (const auto& psi : b.table.characters()) found |= psi.values == image;
        CHECK(found);
        // chi^sigma(g) = chi(g^s)
        for (std::size_t j = 0; j < b.classes.count(); ++j)
          CHECK(image[j] == chi.values[b.classes.power_class(j, s)]);
      }
    }
  }
}

TEST_CASE("verify_table rejects corrupted tables") {
  auto b = build("symmetric:4");
  const unsigned e = b.table.exponent();

  auto swapped = b.table;
  swapped.set_value(3, 1, swapped[3].values[1] + n(e, 1));
  auto r = verify_table(swapped, b.sc);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failed_check.empty());

  auto trivial = b.table;
  trivial.set_value(0, 2, n(e, -1));
  CHECK(verify_table(trivial, b.sc).failed_check == "trivial_row");

  auto degree = b.table;
  degree.set_value(4, 0, n(e, 2));
  CHECK(verify_table(degree, b.sc).failed_check == "degree_column");

  auto s3 = build("symmetric:3");
  CHECK(verify_table(s3.table, b.sc).failed_check == "shape");
}

TEST_CASE("determinism") {
  auto a = build("sl23");
  auto b = build("sl23");
  CHECK(a.table == b.table);
  CHECK(table_to_json(a.table).dump() == table_to_json(b.table).dump());
}

TEST_CASE("export and import") {
  for (const auto& name : testing_catalog::catalog()) {
    CAPTURE(name);
    auto b = build(name);
    auto doc = nlohmann::json::parse(table_to_json(b.table).dump());
    CHECK(table_from_json(doc, b.classes, b.sc, b.group.hash()) == b.table);
  }
  auto b = build("alternating:5");
  auto doc = nlohmann::json::parse(table_to_json(b.table).dump());

  auto wrong_hash = doc;
  wrong_hash["group_hash"] = "fnv1a64:0000000000000000";
  CHECK_THROWS_AS(table_from_json(wrong_hash, b.classes, b.sc, b.group.hash()), CharacterTableError);

  auto shuffled = doc;
  std::swap(shuffled["characters"][1], shuffled["characters"][4]);
  CHECK(table_from_json(shuffled, b.classes, b.sc, b.group.hash()) == b.table);

  auto corrupted = doc;
  corrupted["characters"][3]["values"][1]["coeffs"][0] = "7";
  CHECK_THROWS_AS(table_from_json(corrupted, b.classes, b.sc, b.group.hash()), CharacterTableError);

  auto missing = doc;
  missing.erase("characters");
  CHECK_THROWS_AS(table_from_json(missing, b.classes, b.sc, b.group.hash()), CharacterTableError);

  auto other = build("symmetric:4");
  CHECK_THROWS_AS(table_from_json(doc, other.classes, other.sc, ""), CharacterTableError);
}
