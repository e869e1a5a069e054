#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "pblocks/chartable.hpp"
#include "pblocks/verifier.hpp"

namespace pblocks {

/// A group with everything derived from it, computed once.
struct Analysis {
  FiniteGroup group;
  ClassData classes;
  StructureConstants sc;
  CharacterTable table;
  std::string label;

  AnalysisContext context() const { return {group, classes, sc, table, label}; }
};

/// Computes the character table by Dixon-Schneider unless an imported table
/// document is supplied, in which case that table is verified and used instead.
Analysis analyze(FiniteGroup group, std::string label, const nlohmann::json* imported_table = nullptr);

}  // namespace pblocks
