#include "pblocks/verifier.hpp"

#include <algorithm>

#include "pblocks/kernels.hpp"

namespace pblocks {

namespace {

void require_class_closed(std::span<const ElementSubset> sets) {
  if (sets.empty()) throw std::invalid_argument("at least one set is required");
  for (const auto& s : sets)
    if (!s.class_closed) throw std::invalid_argument("set " + s.label + " is not a union of classes");
}

std::string join_counts(std::span<const Integer> counts) {
  std::string out;
  for (const auto& c : counts) out += (out.empty() ? "" : ",") + c.str();
  return out;
}

}  // namespace

std::string_view method_name(CountMethod m) {
  switch (m) {
    case CountMethod::bruteforce:
      return "bruteforce";
    case CountMethod::classalgebra:
      return "classalgebra";
    case CountMethod::character:
      return "character";
  }
  return "?";
}

std::vector<std::uint64_t> counts_bruteforce(const FiniteGroup& group, std::span<const ElementSubset> sets,
                                             std::uint64_t budget) {
  if (sets.empty()) throw std::invalid_argument("at least one set is required");
  const std::size_t order = group.order();
  std::uint64_t tuples = 1;
  for (const auto& s : sets) {
    if (s.mask.size() != order) throw std::invalid_argument("set " + s.label + " belongs to a different group");
    if (s.size != 0 && tuples > budget / s.size) throw BudgetExceeded("brute-force tuple count exceeds budget");
    tuples *= s.size;
  }
  if (tuples > budget) throw BudgetExceeded("brute-force tuple count exceeds budget");

  std::vector<std::vector<Elem>> members(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Elem g = 0; g < order; ++g)
      if (sets[i].contains(g)) members[i].push_back(g);

  std::vector<std::uint32_t> last(order);
  for (Elem g = 0; g < order; ++g) last[g] = sets.back().contains(g) ? 1u : 0u;

  // Odometer over x_1..x_{n-1}; for a prefix product h, x_n = h^-1 g must lie in the last set.
  std::vector<std::uint64_t> counts(order, 0);
  const std::size_t depth = sets.size() - 1;
  if (std::any_of(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(depth),
                  [](const auto& m) { return m.empty(); }))
    return counts;
  std::vector<std::size_t> digit(depth, 0);
  std::vector<Elem> prefix(depth + 1, 0);  // prefix[i] = x_1 ... x_i
  for (std::size_t i = 0; i < depth; ++i) prefix[i + 1] = group.mul(prefix[i], members[i][0]);
  while (true) {
    simd::gather_add(counts, last, group.row(group.inv(prefix[depth])));
    std::size_t level = depth;
    while (level > 0 && ++digit[level - 1] == members[level - 1].size()) {
      digit[level - 1] = 0;
      --level;
    }
    if (level == 0) break;
    for (std::size_t i = level - 1; i < depth; ++i) prefix[i + 1] = group.mul(prefix[i], members[i][digit[i]]);
  }
  return counts;
}

std::vector<Integer> counts_by_class(const ClassData& classes, std::span<const std::uint64_t> element_counts) {
  std::vector<Integer> out;
  for (std::size_t j = 0; j < classes.count(); ++j) {
    const auto& members = classes[j].members;
    const auto value = element_counts[members.front()];
    for (auto g : members)
      if (element_counts[g] != value)
        throw VerificationError("brute-force counts are not constant on class " + std::to_string(j));
    out.emplace_back(value);
  }
  return out;
}

std::vector<Integer> counts_classalgebra(const StructureConstants& sc, std::span<const ElementSubset> sets) {
  require_class_closed(sets);
  const std::size_t k = sc.class_count();
  std::vector<Integer> v(k, 0);
  for (auto j : sets[0].class_indices) v[j] = 1;
  for (std::size_t s = 1; s < sets.size(); ++s) {
    std::vector<Integer> next(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (v[j] == 0) continue;
      for (auto i : sets[s].class_indices) {
        auto row = sc.row(j, i);
        for (std::size_t l = 0; l < k; ++l)
          if (row[l] != 0) next[l] += v[j] * row[l];
      }
    }
    v = std::move(next);
  }
  return v;
}

std::vector<Integer> counts_character(const CharacterTable& table, std::span<const ElementSubset> sets) {
  require_class_closed(sets);
  const std::size_t k = table.classes().size();
  const std::uint32_t e = table.exponent();
  std::vector<CycInt> total(k, CycInt(e));
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    const Integer degree = table[chi].degree;
    CycInt product = CycInt::from_integer(e, degree);
    for (const auto& s : sets) {
      product = product * omega_numerator(table, chi, s).exact_div(degree);
      if (product.is_zero()) break;
    }
    if (product.is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) total[j] += product * table[chi].values[table.classes()[j].inverse_class];
  }
  std::vector<Integer> out;
  for (std::size_t j = 0; j < k; ++j) {
    CycInt scaled;
    try {
      scaled = total[j].exact_div(table.group_order());
    } catch (const CyclotomicError&) {
      throw VerificationError("character count on class " + std::to_string(j) + " is not divisible by |G|");
    }
    auto n = scaled.as_rational_integer();
    if (!n || *n < 0)
      throw VerificationError("character count on class " + std::to_string(j) + " is not a non-negative integer: " +
                              scaled.to_string());
    out.push_back(*n);
  }
  return out;
}

Constancy condition_ii_constant(std::span<const Integer> counts) {
  if (counts.empty()) return {true, std::nullopt};
  for (const auto& c : counts)
    if (c != counts.front()) return {false, std::nullopt};
  return {true, counts.front()};
}

bool RemarkReport::ok() const {
  return product_ok && bound_ok &&
         std::all_of(frobenius.begin(), frobenius.end(), [](const FrobeniusCheck& f) { return f.divisible; });
}

ConvolutionReport convolution_report(const AnalysisContext& ctx, std::span<const ElementSubset> sets,
                                     const VerifyOptions& options) {
  ConvolutionReport report;
  for (const auto& s : sets) {
    report.set_labels.push_back(s.label);
    report.set_sizes.push_back(s.size);
  }
  report.counts = counts_classalgebra(ctx.sc, sets);
  report.methods.push_back(CountMethod::classalgebra);

  auto character = counts_character(ctx.table, sets);
  if (character != report.counts)
    throw VerificationError("character counts [" + join_counts(character) + "] differ from class-algebra counts [" +
                            join_counts(report.counts) + "]");
  report.methods.push_back(CountMethod::character);

  try {
    auto brute = counts_by_class(ctx.classes, counts_bruteforce(ctx.group, sets, options.budget));
    if (brute != report.counts)
      throw VerificationError("brute-force counts [" + join_counts(brute) + "] differ from class-algebra counts [" +
                              join_counts(report.counts) + "]");
    report.methods.insert(report.methods.begin(), CountMethod::bruteforce);
  } catch (const BudgetExceeded&) {
    // class algebra and character routes still cross-check each other
  }

  Integer mass = 0, product = 1;
  for (std::size_t j = 0; j < ctx.classes.count(); ++j) mass += report.counts[j] * ctx.classes[j].size();
  for (const auto& s : sets) product *= s.size;
  if (mass != product) throw VerificationError("counts do not sum to the number of tuples");

  auto constancy = condition_ii_constant(report.counts);
  report.constant = constancy.constant;
  report.value = constancy.value;
  return report;
}

RemarkReport divisibility_and_frobenius(const ClassData& classes, std::span<const std::uint64_t> primes,
                                      const ConvolutionReport* regular_route) {
  RemarkReport report;
  const std::uint64_t order = classes.group_order();
  for (auto p : prime_divisors(order)) {
    const std::uint64_t regular = p_regular_set(classes, p).size;
    const std::uint64_t complement = pi_complement_part(order, std::span(&p, 1));
    report.frobenius.push_back({p, regular, complement, regular % complement == 0});
  }
  if (regular_route && regular_route->constant && regular_route->value) {
    const Integer& n_value = *regular_route->value;
    Integer product = 1;
    for (auto s : regular_route->set_sizes) product *= s;
    report.product_checked = true;
    report.product_ok = n_value * order == product;
    if (primes.size() >= 2) {
      Integer bound = pi_complement_part(order, primes);
      for (std::size_t i = 2; i < primes.size(); ++i) bound *= order;
      report.bound_checked = true;
      report.bound = bound;
      report.bound_ok = n_value > 0 && n_value % bound == 0;
      if (report.bound_ok) report.multiple = n_value / bound;
    }
  }
  return report;
}

TheoremReport verify_regular_form(const AnalysisContext& ctx, std::span<const std::uint64_t> primes,
                                 const VerifyOptions& options) {
  validate_primes(ctx.classes.group_order(), primes);
  TheoremReport report;
  report.group = ctx.label;
  report.primes.assign(primes.begin(), primes.end());
  report.intersection = principal_intersection(ctx.table, ctx.classes, primes);
  for (auto chi : report.intersection) report.intersection_degrees.push_back(ctx.table[chi].degree);
  report.route_i_holds = report.intersection.size() == 1;

  std::vector<ElementSubset> sets;
  for (auto p : primes) sets.push_back(p_regular_set(ctx.classes, p));
  report.route_ii = convolution_report(ctx, sets, options);
  report.equivalent = report.route_i_holds == report.route_ii.constant;
  report.remark = divisibility_and_frobenius(ctx.classes, primes, &report.route_ii);
  return report;
}

TheoremReport verify_section_form(const AnalysisContext& ctx, std::span<const std::uint64_t> primes,
                                 std::span<const Elem> section_elements, const VerifyOptions& options) {
  validate_primes(ctx.classes.group_order(), primes);
  if (section_elements.size() != primes.size())
    throw SectionError("expected one section element per prime (" + std::to_string(primes.size()) + "), got " +
                       std::to_string(section_elements.size()));
  TheoremReport report;
  report.group = ctx.label;
  report.primes.assign(primes.begin(), primes.end());
  report.section_elements.assign(section_elements.begin(), section_elements.end());

  std::vector<SectionSpec> specs;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto spec = make_section_spec(ctx.group, ctx.classes, primes[i], section_elements[i]);
    if (!spec.central_valid)
      throw SectionError("section element " + std::to_string(section_elements[i]) + " is not central in any Sylow " +
                         std::to_string(primes[i]) + "-subgroup");
    report.section_classes.push_back(spec.z_class);
    specs.push_back(spec);
  }

  report.intersection = principal_intersection(ctx.table, ctx.classes, primes);
  for (auto chi : report.intersection) report.intersection_degrees.push_back(ctx.table[chi].degree);
  report.route_i_holds = report.intersection.size() == 1;

  for (const auto& spec : specs) {
    auto regular = principal_block_membership(ctx.table, ctx.classes, spec.p);
    for (std::size_t chi = 0; chi < ctx.table.size(); ++chi)
      if (section_membership_test(ctx.table, ctx.classes, spec, chi).in_principal != regular.rows[chi].in_principal)
        report.section_agreement = false;
  }

  std::vector<ElementSubset> sets;
  for (const auto& spec : specs) sets.push_back(p_section(ctx.classes, spec.p, spec.z_class));
  report.route_ii = convolution_report(ctx, sets, options);
  report.equivalent = report.route_i_holds == report.route_ii.constant;
  report.remark = divisibility_and_frobenius(ctx.classes, primes, nullptr);
  return report;
}

}  // namespace pblocks
