#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "pblocks/chartable.hpp"
#include "pblocks/verifier.hpp"

namespace pblocks {

using Json = nlohmann::ordered_json;

Json classes_json(const FiniteGroup& group, const ClassData& classes, const std::string& label);
std::string classes_text(const FiniteGroup& group, const ClassData& classes, const std::string& label);

std::string table_text(const CharacterTable& table);

Json membership_json(const CharacterTable& table, const BlockMembership& membership);
Json blocks_json(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                 const std::string& label);
std::string blocks_text(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                        const std::string& label);

/// Every p-element class as a section: size, centrality, and whether section
/// membership reproduces p-regular membership (central classes only).
Json sections_json(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                   const std::string& label);
std::string sections_text(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                          const std::string& label);

Json remark_json(const RemarkReport& remark);
Json theorem_json(const TheoremReport& report);
std::string theorem_text(const TheoremReport& report);

Json frobenius_json(const RemarkReport& remark, const std::string& label, std::uint64_t order);
std::string frobenius_text(const RemarkReport& remark, const std::string& label, std::uint64_t order);

}  // namespace pblocks
