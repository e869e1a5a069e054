#include "pblocks/report.hpp"

#include <cstdio>
#include <sstream>

namespace pblocks {

namespace {

Json certificate_json(const MembershipResult& r) {
  if (r.certificate_integer) return r.certificate_integer->str();
  return cycint_to_json(r.certificate);
}

std::string certificate_text(const MembershipResult& r) {
  return r.certificate_integer ? r.certificate_integer->str() : r.certificate.to_string();
}

std::string approx(const CycInt& v) {
  auto z = v.approximate();
  char buf[64];
  double re = std::abs(z.real()) < 5e-4 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-4 ? 0.0 : z.imag();
  if (im == 0.0) std::snprintf(buf, sizeof buf, "%.3f", re);
  else std::snprintf(buf, sizeof buf, "%.3f%+.3fi", re, im);
  return buf;
}

std::string join(std::span<const std::uint64_t> xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

Json strings(std::span<const Integer> xs) {
  auto a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

}  // namespace

Json classes_json(const FiniteGroup& group, const ClassData& classes, const std::string& label) {
  Json j;
  j["group"] = label;
  j["order"] = group.order();
  j["exponent"] = classes.exponent();
  j["group_hash"] = group.hash();
  auto list = Json::array();
  for (std::size_t c = 0; c < classes.count(); ++c) {
    Json entry;
    entry["index"] = c;
    entry["representative"] = classes[c].representative;
    entry["rep_order"] = classes[c].element_order;
    entry["size"] = classes[c].size();
    entry["centralizer_order"] = classes[c].centralizer_order;
    if (auto perm = group.permutation_of(classes[c].representative)) entry["rep_images"] = perm->images;
    list.push_back(std::move(entry));
  }
  j["classes"] = std::move(list);
  return j;
}

std::string classes_text(const FiniteGroup& group, const ClassData& classes, const std::string& label) {
  std::ostringstream out;
  out << "group " << label << "  order " << group.order() << "  exponent " << classes.exponent() << "  classes "
      << classes.count() << "\n";
  out << "  class  order   size  centralizer  representative\n";
  for (std::size_t c = 0; c < classes.count(); ++c) {
    char line[96];
    std::snprintf(line, sizeof line, "  %5zu  %5u  %5zu  %11llu  ", c, classes[c].element_order, classes[c].size(),
                  static_cast<unsigned long long>(classes[c].centralizer_order));
    out << line;
    if (auto perm = group.permutation_of(classes[c].representative)) {
      out << "[";
      for (std::size_t i = 0; i < perm->images.size(); ++i) out << (i ? "," : "") << perm->images[i];
      out << "]";
    } else {
      out << "element " << classes[c].representative;
    }
    out << "\n";
  }
  return out.str();
}

std::string table_text(const CharacterTable& table) {
  std::ostringstream out;
  out << "character table  e = " << table.exponent() << "  q = " << table.modulus().q
      << "  lambda = " << table.modulus().lambda << "  (z" << table.exponent() << " = exp(2 pi i/"
      << table.exponent() << "))\n";
  out << "classes (order/size):";
  for (const auto& c : table.classes()) out << " " << c.element_order << "/" << c.size;
  out << "\n";
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    out << "chi" << chi << " (degree " << table[chi].degree << ")\n";
    for (std::size_t j = 0; j < table[chi].values.size(); ++j) {
      const auto& v = table[chi].values[j];
      out << "  K" << j << ": " << v.to_string() << "   ~ " << approx(v) << "\n";
    }
  }
  out << "(decimal values are approximations for display; exact values are authoritative)\n";
  return out.str();
}

Json membership_json(const CharacterTable& table, const BlockMembership& membership) {
  Json j;
  j["p"] = membership.p;
  auto rows = Json::array();
  for (std::size_t chi = 0; chi < membership.rows.size(); ++chi) {
    Json row;
    row["degree"] = table[chi].degree;
    row["in_principal"] = membership.rows[chi].in_principal;
    row["certificate"] = certificate_json(membership.rows[chi]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json blocks_json(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                 const std::string& label) {
  Json j;
  j["group"] = label;
  j["primes"] = std::vector<std::uint64_t>(primes.begin(), primes.end());
  auto reports = Json::array();
  for (auto p : primes) reports.push_back(membership_json(table, principal_block_membership(table, classes, p)));
  j["reports"] = std::move(reports);
  auto inter = principal_intersection(table, classes, primes);
  j["intersection"] = inter;
  return j;
}

std::string blocks_text(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                        const std::string& label) {
  std::ostringstream out;
  out << "principal blocks of " << label << " for primes {" << join(primes) << "}\n";
  for (auto p : primes) {
    auto m = principal_block_membership(table, classes, p);
    out << "p = " << p << "\n";
    for (std::size_t chi = 0; chi < m.rows.size(); ++chi)
      out << "  chi" << chi << " degree " << table[chi].degree << ": "
          << (m.rows[chi].in_principal ? "in " : "out") << "  certificate " << certificate_text(m.rows[chi]) << "\n";
  }
  out << "in every principal block:";
  for (auto chi : principal_intersection(table, classes, primes)) out << " chi" << chi;
  out << "\n";
  return out.str();
}

Json sections_json(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                   const std::string& label) {
  Json j;
  j["group"] = label;
  auto per_prime = Json::array();
  for (auto p : primes) {
    auto regular = principal_block_membership(table, classes, p);
    Json entry;
    entry["p"] = p;
    auto list = Json::array();
    for (auto z : p_element_classes(classes, p)) {
      Json s;
      auto section = p_section(classes, p, z);
      bool central = central_in_some_sylow(classes, p, z);
      s["z_class"] = z;
      s["z_order"] = classes[z].element_order;
      s["size"] = section.size;
      s["classes"] = section.class_indices;
      s["central_valid"] = central;
      if (central) {
        bool agrees = true;
        SectionSpec spec{p, classes[z].representative, z, true};
        for (std::size_t chi = 0; chi < table.size(); ++chi)
          agrees = agrees &&
                   section_membership_test(table, classes, spec, chi).in_principal == regular.rows[chi].in_principal;
        s["membership_agrees"] = agrees;
      } else {
        s["membership_agrees"] = nullptr;
      }
      list.push_back(std::move(s));
    }
    entry["sections"] = std::move(list);
    per_prime.push_back(std::move(entry));
  }
  j["primes"] = std::move(per_prime);
  return j;
}

std::string sections_text(const CharacterTable& table, const ClassData& classes, std::span<const std::uint64_t> primes,
                          const std::string& label) {
  auto j = sections_json(table, classes, primes, label);
  std::ostringstream out;
  out << "p-sections of " << label << "\n";
  for (const auto& entry : j["primes"]) {
    out << "p = " << entry["p"].get<std::uint64_t>() << "\n";
    for (const auto& s : entry["sections"]) {
      out << "  z in K" << s["z_class"].get<std::size_t>() << " (order " << s["z_order"].get<unsigned>()
          << "): size " << s["size"].get<std::size_t>() << ", "
          << (s["central_valid"].get<bool>() ? "central in a Sylow subgroup" : "not central in any Sylow subgroup");
      if (!s["membership_agrees"].is_null())
        out << ", section test " << (s["membership_agrees"].get<bool>() ? "agrees" : "DISAGREES");
      out << "\n";
    }
  }
  return out.str();
}

Json remark_json(const RemarkReport& remark) {
  Json j;
  auto frob = Json::array();
  for (const auto& f : remark.frobenius)
    frob.push_back({{"p", f.p},
                    {"regular_count", f.regular_count},
                    {"p_complement_part", f.p_complement_part},
                    {"divisible", f.divisible}});
  j["frobenius"] = std::move(frob);
  j["product_checked"] = remark.product_checked;
  j["product_ok"] = remark.product_ok;
  j["bound_checked"] = remark.bound_checked;
  j["bound"] = remark.bound ? Json(remark.bound->str()) : Json(nullptr);
  j["multiple"] = remark.multiple ? Json(remark.multiple->str()) : Json(nullptr);
  j["bound_ok"] = remark.bound_ok;
  j["ok"] = remark.ok();
  return j;
}

Json theorem_json(const TheoremReport& report) {
  Json j;
  j["group"] = report.group;
  j["primes"] = report.primes;
  if (!report.section_classes.empty()) {
    auto sections = Json::array();
    for (std::size_t i = 0; i < report.section_classes.size(); ++i)
      sections.push_back({{"p", report.primes[i]},
                          {"z", report.section_elements[i]},
                          {"z_class", report.section_classes[i]}});
    j["sections"] = std::move(sections);
    j["section_agreement"] = report.section_agreement;
  }
  j["route_i"] = {{"holds", report.route_i_holds},
                  {"intersection", report.intersection},
                  {"intersection_degrees", report.intersection_degrees}};
  Json route_ii;
  route_ii["constant"] = report.route_ii.constant;
  route_ii["value"] = report.route_ii.value ? Json(report.route_ii.value->str()) : Json(nullptr);
  route_ii["counts_by_class"] = strings(report.route_ii.counts);
  route_ii["set_sizes"] = report.route_ii.set_sizes;
  auto methods = Json::array();
  for (auto m : report.route_ii.methods) methods.push_back(std::string(method_name(m)));
  route_ii["methods"] = std::move(methods);
  j["route_ii"] = std::move(route_ii);
  j["equivalent"] = report.equivalent;
  j["divisibility"] = remark_json(report.remark);
  return j;
}

std::string theorem_text(const TheoremReport& report) {
  std::ostringstream out;
  out << "group " << report.group << ", primes {" << join(report.primes) << "}\n";
  for (std::size_t i = 0; i < report.section_classes.size(); ++i)
    out << "  section for p = " << report.primes[i] << ": z = element " << report.section_elements[i] << " (class K"
        << report.section_classes[i] << ")\n";
  out << "route (i): characters in every principal block have degrees {" << join(report.intersection_degrees)
      << "} -> " << (report.route_i_holds ? "only the trivial character" : "more than the trivial character") << "\n";
  out << "route (ii): counts by class [";
  for (std::size_t k = 0; k < report.route_ii.counts.size(); ++k)
    out << (k ? ", " : "") << report.route_ii.counts[k].str();
  out << "] via";
  for (auto m : report.route_ii.methods) out << " " << method_name(m);
  out << " -> " << (report.route_ii.constant ? "constant " + report.route_ii.value->str() : std::string("not constant"))
      << "\n";
  out << "equivalent: " << (report.equivalent ? "yes" : "NO") << "\n";
  if (!report.section_classes.empty())
    out << "section membership matches p-regular membership: " << (report.section_agreement ? "yes" : "NO") << "\n";
  if (report.remark.bound_checked)
    out << "multiplicity bound " << report.remark.bound->str() << ": "
        << (report.remark.bound_ok ? "N = " + report.remark.multiple->str() + " x bound" : std::string("VIOLATED"))
        << "\n";
  return out.str();
}

Json frobenius_json(const RemarkReport& remark, const std::string& label, std::uint64_t order) {
  Json j;
  j["group"] = label;
  j["order"] = order;
  j["frobenius"] = remark_json(remark)["frobenius"];
  j["ok"] = remark.ok();
  return j;
}

std::string frobenius_text(const RemarkReport& remark, const std::string& label, std::uint64_t order) {
  std::ostringstream out;
  out << "Frobenius divisibility for " << label << " (order " << order << ")\n";
  for (const auto& f : remark.frobenius)
    out << "  p = " << f.p << ": |G_p'| = " << f.regular_count << ", |G|_p' = " << f.p_complement_part << " -> "
        << (f.divisible ? "divides" : "DOES NOT DIVIDE") << "\n";
  return out.str();
}

}  // namespace pblocks
