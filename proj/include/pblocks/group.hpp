#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pblocks {

/// Index of a group element; index 0 is always the identity.
using Elem = std::uint32_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Permutation on {1..degree}, stored as 1-based images.
struct Permutation {
  std::vector<std::uint32_t> images;

  std::size_t degree() const { return images.size(); }
  /// Throws GroupError unless images is a bijection on {1..degree}.
  void validate() const;
  bool operator==(const Permutation&) const = default;
};

enum class GroupSource { permutation, cayley, builtin };

struct EnumerationLimits {
  std::size_t max_order = 10000;
  std::size_t max_degree = 64;
};

/// A fully enumerated finite group with table-driven multiplication.
///
/// Multiplication composes left to right: for permutation groups,
/// mul(a, b) maps x to b(a(x)).
class FiniteGroup {
 public:
  /// Breadth-first closure over the generators in the given order.
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                       EnumerationLimits limits = {});
  /// 0-based Cayley table, row 0 must be the identity. All group axioms are
  /// checked, associativity exhaustively.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                                       EnumerationLimits limits = {});
  /// Accepts names with or without the "builtin:" prefix.
  static FiniteGroup builtin(std::string_view name, EnumerationLimits limits = {});
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, EnumerationLimits limits = {});

  std::size_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t{a} * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem power(Elem a, std::uint64_t s) const;
  std::uint32_t element_order(Elem a) const { return element_order_[a]; }
  /// Row a of the multiplication table: b -> mul(a, b).
  std::span<const Elem> row(Elem a) const { return {table_.data() + std::size_t{a} * order_, order_}; }

  GroupSource source() const { return source_; }
  bool is_abelian() const;

  /// Degree of the permutation representation, when the group carries one.
  std::optional<std::size_t> permutation_degree() const { return perm_degree_; }
  std::optional<Permutation> permutation_of(Elem a) const;
  std::optional<Elem> find_permutation(const Permutation& p) const;

  /// Stable hash of the Cayley table; binds exported tables to this group.
  std::string hash() const;

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> element_order_;
  GroupSource source_ = GroupSource::cayley;
  std::optional<std::size_t> perm_degree_;
  std::vector<std::uint32_t> perm_images_;  // 0-based, order_ * degree
};

}  // namespace pblocks
