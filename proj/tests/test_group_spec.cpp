#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pblocks/group_spec.hpp"

using namespace pblocks;

TEST_CASE("json group specifications") {
  auto perm = group_spec_from_json(nlohmann::json::parse(
      R"({"type":"permutation","degree":4,"generators":[[2,3,4,1],[2,1,3,4]]})"));
  CHECK(enumerate_group(perm).order() == 24);

  auto cayley = group_spec_from_json(nlohmann::json::parse(R"({"type":"cayley","table":[[0,1],[1,0]]})"));
  CHECK(enumerate_group(cayley).order() == 2);

  auto builtin = group_spec_from_json(nlohmann::json::parse(R"({"type":"builtin","name":"sl23"})"));
  CHECK(enumerate_group(builtin).order() == 24);

  CHECK_THROWS_AS(group_spec_from_json(nlohmann::json::parse(R"({"type":"matrix"})")), GroupError);
  CHECK_THROWS_AS(group_spec_from_json(nlohmann::json::parse(R"({"type":"permutation"})")), GroupError);
  auto bad = group_spec_from_json(nlohmann::json::parse(R"({"type":"permutation","degree":3,"generators":[[1,1,2]]})"));
  CHECK_THROWS_AS(enumerate_group(bad), GroupError);
}

TEST_CASE("spec round trip through json") {
  for (const char* text : {R"({"type":"permutation","degree":3,"generators":[[2,3,1]]})",
                           R"({"type":"cayley","table":[[0,1,2],[1,2,0],[2,0,1]]})",
                           R"({"type":"builtin","name":"dihedral:4"})"}) {
    auto spec = group_spec_from_json(nlohmann::json::parse(text));
    auto again = group_spec_from_json(nlohmann::json::parse(group_spec_to_json(spec).dump()));
    CHECK(enumerate_group(spec).hash() == enumerate_group(again).hash());
  }
}

TEST_CASE("group files") {
  auto path = std::filesystem::temp_directory_path() / "pblocks_spec_test.json";
  std::ofstream(path) << R"({"type":"permutation","degree":3,"generators":[[2,1,3],[1,3,2]]})";
  CHECK(enumerate_group(parse_group_spec(path.string())).order() == 6);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_group_spec("/nonexistent/group.json"), GroupError);
  CHECK(std::holds_alternative<BuiltinSpec>(parse_group_spec("builtin:cyclic:5")));
}

TEST_CASE("element references") {
  auto g = FiniteGroup::builtin("symmetric:4");
  ClassData c(g);
  auto x = parse_element_spec(g, c, "(1 2 3)");
  CHECK(g.permutation_of(x)->images == std::vector<std::uint32_t>{2, 3, 1, 4});
  CHECK(parse_element_spec(g, c, "[2,3,1,4]") == x);
  CHECK(parse_element_spec(g, c, "element:0") == 0);
  CHECK(parse_element_spec(g, c, "class:2:rep") == c[2].representative);
  // cycles compose left to right
  auto y = parse_element_spec(g, c, "(1 2)(2 3)");
  CHECK(g.permutation_of(y)->images == std::vector<std::uint32_t>{3, 1, 2, 4});
  CHECK_THROWS(parse_element_spec(g, c, "(1 5)"));
  CHECK_THROWS(parse_element_spec(g, c, "class:99:rep"));
  CHECK_THROWS(parse_element_spec(g, c, "element:24"));
  CHECK_THROWS(parse_element_spec(g, c, "banana"));

  auto cay = FiniteGroup::builtin("cyclic:100");
  ClassData cc(cay);
  CHECK_THROWS(parse_element_spec(cay, cc, "(1 2)"));
}

TEST_CASE("direct products") {
  auto g = FiniteGroup::builtin("product:(product:cyclic:2,cyclic:3),symmetric:3");
  CHECK(g.order() == 36);
  CHECK(g.permutation_degree() == 8);
  CHECK(ClassData(g).count() == 18);
}
