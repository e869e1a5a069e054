#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pblocks/blocks.hpp"
#include "pblocks/chartable.hpp"
#include "pblocks/classes.hpp"
#include "pblocks/structure.hpp"

namespace pblocks {

/// An internal inconsistency: two independent routes disagree where the
/// mathematics says they cannot.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

enum class CountMethod { bruteforce, classalgebra, character };
std::string_view method_name(CountMethod m);

/// Number of tuples (x_1, ..., x_n), x_i in sets[i], with x_1 ... x_n = g, for every element g.
/// Tuples are enumerated exhaustively; the budget caps their number.
std::vector<std::uint64_t> counts_bruteforce(const FiniteGroup& group, std::span<const ElementSubset> sets,
                                             std::uint64_t budget = kDefaultBruteForceBudget);

/// Collapses per-element counts to per-class counts, checking they form a class function.
std::vector<Integer> counts_by_class(const ClassData& classes, std::span<const std::uint64_t> element_counts);

/// Product of the class sums S_1^+ ... S_n^+ in the class-sum basis.
std::vector<Integer> counts_classalgebra(const StructureConstants& sc, std::span<const ElementSubset> sets);

/// N(g) = (1/|G|) sum_chi chi(1) chi(g^-1) prod_i omega_chi(S_i^+).
std::vector<Integer> counts_character(const CharacterTable& table, std::span<const ElementSubset> sets);

struct Constancy {
  bool constant;
  std::optional<Integer> value;
};

Constancy condition_ii_constant(std::span<const Integer> counts);

struct ConvolutionReport {
  std::vector<std::string> set_labels;
  std::vector<std::uint64_t> set_sizes;
  std::vector<Integer> counts;  // per class
  bool constant = false;
  std::optional<Integer> value;
  std::vector<CountMethod> methods;
};

struct FrobeniusCheck {
  std::uint64_t p;
  std::uint64_t regular_count;      // |G_{p'}|
  std::uint64_t p_complement_part;  // |G|_{p'}
  bool divisible;
};

struct RemarkReport {
  std::vector<FrobeniusCheck> frobenius;
  bool product_checked = false;  // N |G| = prod |G_{p_i'}|
  bool product_ok = true;
  bool bound_checked = false;    // n >= 2 and route (ii) constant
  std::optional<Integer> bound;  // |G|^(n-2) |G|_{pi'}
  std::optional<Integer> multiple;
  bool bound_ok = true;

  bool ok() const;
};

struct TheoremReport {
  std::string group;
  std::vector<std::uint64_t> primes;
  std::vector<Elem> section_elements;  // empty for the p-regular form
  std::vector<std::size_t> section_classes;
  std::vector<std::size_t> intersection;
  std::vector<std::uint64_t> intersection_degrees;
  bool route_i_holds = false;
  ConvolutionReport route_ii;
  bool equivalent = false;
  bool section_agreement = true;  // section membership matches p-regular membership
  RemarkReport remark;

  /// Everything the mathematics guarantees actually held.
  bool all_properties_hold() const { return equivalent && section_agreement && remark.ok(); }
};

struct AnalysisContext {
  const FiniteGroup& group;
  const ClassData& classes;
  const StructureConstants& sc;
  const CharacterTable& table;
  std::string label;
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBruteForceBudget;
};

/// Runs all applicable counting routes and throws VerificationError on any disagreement.
ConvolutionReport convolution_report(const AnalysisContext& ctx, std::span<const ElementSubset> sets,
                                     const VerifyOptions& options = {});

TheoremReport verify_regular_form(const AnalysisContext& ctx, std::span<const std::uint64_t> primes,
                                 const VerifyOptions& options = {});
TheoremReport verify_section_form(const AnalysisContext& ctx, std::span<const std::uint64_t> primes,
                                 std::span<const Elem> section_elements, const VerifyOptions& options = {});

/// Frobenius divisibility for every prime divisor of |G|; when the route (ii)
/// counts over p-regular sets are constant, also the product identity and,
/// for n >= 2, the multiple of |G|^(n-2) |G|_{pi'}.
RemarkReport divisibility_and_frobenius(const ClassData& classes, std::span<const std::uint64_t> primes,
                                      const ConvolutionReport* regular_route);

}  // namespace pblocks
