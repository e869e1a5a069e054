#include "pblocks/analysis.hpp"

namespace pblocks {

namespace {

CharacterTable make_table(const FiniteGroup& group, const ClassData& classes, const StructureConstants& sc,
                          const nlohmann::json* imported) {
  if (imported) return table_from_json(*imported, classes, sc, group.hash());
  return dixon_schneider(group, classes, sc);
}

}  // namespace

Analysis analyze(FiniteGroup group, std::string label, const nlohmann::json* imported_table) {
  ClassData classes(group);
  StructureConstants sc(group, classes);
  CharacterTable table = make_table(group, classes, sc, imported_table);
  return {std::move(group), std::move(classes), std::move(sc), std::move(table), std::move(label)};
}

}  // namespace pblocks
