#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pblocks/group.hpp"

namespace pblocks {

class PrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConjugacyClass {
  Elem representative;       // minimal member index
  std::vector<Elem> members; // ascending
  std::uint32_t element_order;
  std::uint64_t centralizer_order;

  std::size_t size() const { return members.size(); }
};

/// Conjugacy structure of a group. Classes are ordered by
/// (element order, class size, representative index); class 0 is {identity}.
class ClassData {
 public:
  explicit ClassData(const FiniteGroup& group);

  std::size_t count() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t j) const { return classes_[j]; }
  std::span<const ConjugacyClass> classes() const { return classes_; }

  std::size_t class_of(Elem g) const { return class_of_[g]; }
  std::uint64_t group_order() const { return group_order_; }
  /// Least common multiple of the element orders.
  std::uint32_t exponent() const { return exponent_; }
  /// Class of (representative of class j)^s.
  std::size_t power_class(std::size_t j, std::uint64_t s) const {
    return power_[j * exponent_ + s % exponent_];
  }
  std::size_t inverse_class(std::size_t j) const {
    return power_class(j, classes_[j].element_order - 1);
  }

 private:
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> power_;
  std::uint64_t group_order_;
  std::uint32_t exponent_;
};

inline ClassData conjugacy_classes(const FiniteGroup& group) { return ClassData(group); }

/// Conjugation-invariant subsets carry their class list; arbitrary ones do not.
struct ElementSubset {
  bool class_closed = false;
  std::vector<std::size_t> class_indices;
  std::vector<bool> mask;
  std::size_t size = 0;
  std::string label;

  bool contains(Elem g) const { return mask[g]; }
};

ElementSubset class_union(const ClassData& classes, std::vector<std::size_t> class_indices, std::string label);
ElementSubset arbitrary_subset(std::size_t group_order, std::span<const Elem> elements, std::string label);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest divisor of n made only of primes from the given set.
std::uint64_t pi_part(std::uint64_t n, std::span<const std::uint64_t> primes);
/// Largest divisor of n coprime to every prime in the set.
std::uint64_t pi_complement_part(std::uint64_t n, std::span<const std::uint64_t> primes);

/// Primes must be prime, pairwise distinct and divide the group order.
void validate_primes(std::uint64_t group_order, std::span<const std::uint64_t> primes);

/// Exponents (a, b) with g^a the p-part and g^b the p'-part of an element of the given order.
std::pair<std::uint64_t, std::uint64_t> p_part_exponents(std::uint64_t element_order, std::uint64_t p);

struct PDecomposition {
  Elem p_part;
  Elem p_regular_part;
};

PDecomposition p_decompose(const FiniteGroup& group, Elem g, std::uint64_t p);

/// Class of the p-part of the representative of class j.
std::size_t p_part_class(const ClassData& classes, std::size_t j, std::uint64_t p);

ElementSubset p_regular_set(const ClassData& classes, std::uint64_t p);

/// Elements whose p-part is conjugate to z. z must be a p-element.
ElementSubset p_section(const ClassData& classes, std::uint64_t p, std::size_t z_class);
ElementSubset p_section(const FiniteGroup& group, const ClassData& classes, std::uint64_t p, Elem z);

/// True iff z lies in the centre of some Sylow p-subgroup, decided by |C_G(z)|_p = |G|_p.
bool central_in_some_sylow(const ClassData& classes, std::uint64_t p, std::size_t z_class);
bool central_in_some_sylow(const FiniteGroup& group, const ClassData& classes, std::uint64_t p, Elem z);

struct SectionSpec {
  std::uint64_t p;
  Elem z;
  std::size_t z_class;
  bool central_valid;
};

SectionSpec make_section_spec(const FiniteGroup& group, const ClassData& classes, std::uint64_t p, Elem z);

/// Classes whose representatives are p-elements, in class order.
std::vector<std::size_t> p_element_classes(const ClassData& classes, std::uint64_t p);

}  // namespace pblocks
