#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pblocks/classes.hpp"
#include "pblocks/group.hpp"

namespace pblocks {

struct BuiltinSpec {
  std::string name;  // without the "builtin:" prefix
};

struct PermutationSpec {
  std::size_t degree;
  std::vector<Permutation> generators;
};

struct CayleySpec {
  std::vector<std::vector<std::int64_t>> table;
};

using GroupSpec = std::variant<BuiltinSpec, PermutationSpec, CayleySpec>;

/// "builtin:..." names resolve directly; anything else is read as a JSON group file.
GroupSpec parse_group_spec(std::string_view text);
GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_spec_to_json(const GroupSpec& spec);

FiniteGroup enumerate_group(const GroupSpec& spec, EnumerationLimits limits = {});

/// Element references: "class:<i>:rep", "element:<i>", an image array "[2,1,3]",
/// or cycle notation "(1 2)(3 4 5)".
Elem parse_element_spec(const FiniteGroup& group, const ClassData& classes, std::string_view text);

}  // namespace pblocks
