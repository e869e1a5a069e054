#include "pblocks/blocks.hpp"

#include <algorithm>

namespace pblocks {

namespace {

MembershipResult decide(const CharacterTable& table, std::size_t chi, const ElementSubset& subset) {
  CycInt sum = omega_numerator(table, chi, subset);
  MembershipResult result{!sum.is_zero(), sum, sum.as_rational_integer()};
  return result;
}

}  // namespace

CycInt omega_numerator(const CharacterTable& table, std::size_t chi, const ElementSubset& subset) {
  if (!subset.class_closed) throw std::invalid_argument("subset " + subset.label + " is not a union of classes");
  if (chi >= table.size()) throw std::out_of_range("character index " + std::to_string(chi));
  CycInt sum(table.exponent());
  for (auto j : subset.class_indices) sum += table[chi].values[j] * Integer(table.classes()[j].size);
  return sum;
}

MembershipResult in_principal_block(const CharacterTable& table, const ClassData& classes, std::uint64_t p,
                                    std::size_t chi) {
  validate_primes(classes.group_order(), std::span(&p, 1));
  return decide(table, chi, p_regular_set(classes, p));
}

BlockMembership principal_block_membership(const CharacterTable& table, const ClassData& classes, std::uint64_t p) {
  validate_primes(classes.group_order(), std::span(&p, 1));
  const auto regular = p_regular_set(classes, p);
  BlockMembership out{p, {}};
  for (std::size_t chi = 0; chi < table.size(); ++chi) out.rows.push_back(decide(table, chi, regular));
  return out;
}

std::vector<std::size_t> principal_intersection(const CharacterTable& table, const ClassData& classes,
                                                std::span<const std::uint64_t> primes) {
  validate_primes(classes.group_order(), primes);
  std::vector<bool> keep(table.size(), true);
  for (auto p : primes) {
    auto membership = principal_block_membership(table, classes, p);
    for (std::size_t chi = 0; chi < table.size(); ++chi) keep[chi] = keep[chi] && membership.rows[chi].in_principal;
  }
  std::vector<std::size_t> out;
  for (std::size_t chi = 0; chi < table.size(); ++chi)
    if (keep[chi]) out.push_back(chi);
  return out;
}

MembershipResult section_membership_test(const CharacterTable& table, const ClassData& classes,
                                         const SectionSpec& spec, std::size_t chi) {
  if (!spec.central_valid)
    throw SectionError("section element of class " + std::to_string(spec.z_class) +
                       " is not central in any Sylow " + std::to_string(spec.p) + "-subgroup");
  return decide(table, chi, p_section(classes, spec.p, spec.z_class));
}

}  // namespace pblocks
