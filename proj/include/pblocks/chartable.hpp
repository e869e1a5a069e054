#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "pblocks/classes.hpp"
#include "pblocks/cyclotomic.hpp"
#include "pblocks/structure.hpp"

namespace pblocks {

class CharacterTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModulusChoice {
  std::uint32_t q;
  std::uint32_t lambda;  // smallest element of multiplicative order exactly e
  bool operator==(const ModulusChoice&) const = default;
};

inline constexpr std::uint64_t kModulusSearchCap = std::uint64_t{1} << 26;

/// Smallest prime q = 1 (mod e) with q > 2 floor(sqrt(order)).
ModulusChoice choose_modulus(std::uint32_t e, std::uint64_t order, std::uint64_t search_cap = kModulusSearchCap);

struct Character {
  std::uint64_t degree = 0;
  std::vector<CycInt> values;  // one per class
  bool operator==(const Character&) const = default;
};

/// Per-class facts a table needs independently of the group object.
struct ClassSummary {
  std::uint64_t size;
  std::uint32_t element_order;
  std::size_t inverse_class;
  bool operator==(const ClassSummary&) const = default;
};

class CharacterTable {
 public:
  CharacterTable(const ClassData& classes, std::string group_hash, ModulusChoice modulus,
                 std::vector<Character> characters);

  std::size_t size() const { return characters_.size(); }
  const Character& operator[](std::size_t i) const { return characters_[i]; }
  const std::vector<Character>& characters() const { return characters_; }
  const std::vector<ClassSummary>& classes() const { return classes_; }
  std::uint64_t group_order() const { return group_order_; }
  std::uint32_t exponent() const { return exponent_; }
  const ModulusChoice& modulus() const { return modulus_; }
  const std::string& group_hash() const { return group_hash_; }

  /// Trivial first, then by degree, then lexicographically on coordinates.
  void sort_rows();
  /// Replaces one value; used to build negative tests.
  void set_value(std::size_t chi, std::size_t cls, CycInt value) { characters_[chi].values[cls] = std::move(value); }

  bool operator==(const CharacterTable&) const = default;

 private:
  std::vector<ClassSummary> classes_;
  std::uint64_t group_order_;
  std::uint32_t exponent_;
  std::string group_hash_;
  ModulusChoice modulus_;
  std::vector<Character> characters_;
};

/// Exact irreducible characters by simultaneous diagonalisation of the class
/// matrices over F_q followed by exact lifting into Z[zeta_e].
CharacterTable dixon_schneider(const FiniteGroup& group, const ClassData& classes, const StructureConstants& sc);

/// Direct construction for abelian groups (characters as homomorphisms into
/// the e-th roots of unity). Independent of dixon_schneider.
CharacterTable abelian_character_table(const FiniteGroup& group, const ClassData& classes);

struct TableVerification {
  bool ok = true;
  std::string failed_check;  // empty when ok
  std::string detail;
};

TableVerification verify_table(const CharacterTable& table, const StructureConstants& sc);

nlohmann::ordered_json cycint_to_json(const CycInt& value);
CycInt cycint_from_json(const nlohmann::json& j);

nlohmann::ordered_json table_to_json(const CharacterTable& table);
/// Checks the schema against the given group, then re-verifies the table.
/// A non-empty "group_hash" in the document must match.
CharacterTable table_from_json(const nlohmann::json& j, const ClassData& classes, const StructureConstants& sc,
                               const std::string& group_hash);

}  // namespace pblocks
