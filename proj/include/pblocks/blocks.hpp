#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pblocks/chartable.hpp"
#include "pblocks/classes.hpp"

namespace pblocks {

class SectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// chi(1) * omega_chi(S^+) = sum over classes K in S of |K| chi(g_K).
CycInt omega_numerator(const CharacterTable& table, std::size_t chi, const ElementSubset& subset);

struct MembershipResult {
  bool in_principal;
  CycInt certificate;
  std::optional<Integer> certificate_integer;
};

/// Principal p-block membership: omega_chi does not annihilate the p-regular class sum.
MembershipResult in_principal_block(const CharacterTable& table, const ClassData& classes, std::uint64_t p,
                                    std::size_t chi);

struct BlockMembership {
  std::uint64_t p;
  std::vector<MembershipResult> rows;
};

BlockMembership principal_block_membership(const CharacterTable& table, const ClassData& classes, std::uint64_t p);

/// Characters lying in every listed principal block; always contains row 0.
std::vector<std::size_t> principal_intersection(const CharacterTable& table, const ClassData& classes,
                                                std::span<const std::uint64_t> primes);

/// Membership decided by the p-section of z instead; z must be central in a Sylow p-subgroup.
MembershipResult section_membership_test(const CharacterTable& table, const ClassData& classes,
                                         const SectionSpec& spec, std::size_t chi);

}  // namespace pblocks
