#include "pblocks/group_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pblocks {

namespace {

std::size_t parse_index(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw GroupError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p;
  p.images.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images[i] = static_cast<std::uint32_t>(i + 1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw GroupError("malformed cycle notation '" + std::string(text) + "'");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw GroupError("unbalanced cycle notation '" + std::string(text) + "'");
    std::vector<std::uint32_t> cycle;
    std::string body(text.substr(pos + 1, close - pos - 1));
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    std::string token;
    while (in >> token) {
      auto point = parse_index(token, "cycle point");
      if (point < 1 || point > degree) throw GroupError("cycle point " + token + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<std::uint32_t>(point));
    }
    // cycles compose left to right, consistent with the group multiplication
    Permutation c;
    c.images.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) c.images[i] = static_cast<std::uint32_t>(i + 1);
    for (std::size_t i = 0; i < cycle.size(); ++i) c.images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    c.validate();
    for (auto& img : p.images) img = c.images[img - 1];
    pos = close + 1;
  }
  return p;
}

}  // namespace

GroupSpec group_spec_from_json(const nlohmann::json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "permutation") {
      PermutationSpec spec{j.at("degree").get<std::size_t>(), {}};
      for (const auto& gen : j.at("generators")) spec.generators.push_back({gen.get<std::vector<std::uint32_t>>()});
      return spec;
    }
    if (type == "cayley") return CayleySpec{j.at("table").get<std::vector<std::vector<std::int64_t>>>()};
    if (type == "builtin") return BuiltinSpec{j.at("name").get<std::string>()};
    throw GroupError("unknown group type '" + type + "'");
  } catch (const nlohmann::json::exception& ex) {
    throw GroupError(std::string("malformed group specification: ") + ex.what());
  }
}

GroupSpec parse_group_spec(std::string_view text) {
  if (text.starts_with("builtin:")) return BuiltinSpec{std::string(text.substr(8))};
  std::ifstream in{std::string(text)};
  if (!in) throw GroupError("cannot read group file '" + std::string(text) + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw GroupError("group file '" + std::string(text) + "' is not valid JSON: " + ex.what());
  }
  return group_spec_from_json(j);
}

nlohmann::ordered_json group_spec_to_json(const GroupSpec& spec) {
  nlohmann::ordered_json j;
  if (const auto* b = std::get_if<BuiltinSpec>(&spec)) {
    j["type"] = "builtin";
    j["name"] = b->name;
  } else if (const auto* p = std::get_if<PermutationSpec>(&spec)) {
    j["type"] = "permutation";
    j["degree"] = p->degree;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : p->generators) gens.push_back(g.images);
    j["generators"] = std::move(gens);
  } else {
    j["type"] = "cayley";
    j["table"] = std::get<CayleySpec>(spec).table;
  }
  return j;
}

FiniteGroup enumerate_group(const GroupSpec& spec, EnumerationLimits limits) {
  if (const auto* b = std::get_if<BuiltinSpec>(&spec)) return FiniteGroup::builtin(b->name, limits);
  if (const auto* p = std::get_if<PermutationSpec>(&spec))
    return FiniteGroup::from_permutations(p->degree, p->generators, limits);
  return FiniteGroup::from_cayley_table(std::get<CayleySpec>(spec).table, limits);
}

Elem parse_element_spec(const FiniteGroup& group, const ClassData& classes, std::string_view text) {
  if (text.starts_with("class:")) {
    auto rest = text.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos || rest.substr(colon + 1) != "rep")
      throw GroupError("class reference must look like class:<index>:rep");
    auto j = parse_index(rest.substr(0, colon), "class index");
    if (j >= classes.count()) throw GroupError("class index " + std::to_string(j) + " out of range");
    return classes[j].representative;
  }
  if (text.starts_with("element:")) {
    auto g = parse_index(text.substr(8), "element index");
    if (g >= group.order()) throw GroupError("element index " + std::to_string(g) + " out of range");
    return static_cast<Elem>(g);
  }
  if (!group.permutation_degree())
    throw GroupError("group has no permutation representation; use class:<i>:rep or element:<i>");
  Permutation p;
  if (text.starts_with("[")) {
    try {
      p.images = nlohmann::json::parse(text).get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception& ex) {
      throw GroupError(std::string("malformed image array: ") + ex.what());
    }
    p.validate();
  } else if (text.starts_with("(")) {
    p = parse_cycles(text, *group.permutation_degree());
  } else {
    throw GroupError("unrecognised element reference '" + std::string(text) + "'");
  }
  auto g = group.find_permutation(p);
  if (!g) throw GroupError("permutation '" + std::string(text) + "' is not an element of the group");
  return *g;
}

}  // namespace pblocks
