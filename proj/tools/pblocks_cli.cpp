// Command-line front end: principal-block and factorization-count checks for finite groups.
//
// Exit codes: 0 success, 1 a proven property failed to hold (an internal bug), 2 usage or input error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pblocks/analysis.hpp"
#include "pblocks/group_spec.hpp"
#include "pblocks/kernels.hpp"
#include "pblocks/report.hpp"

namespace {

using namespace pblocks;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string primes;
  std::vector<std::string> sections;
  std::string table_file;
  std::uint64_t budget = kDefaultBruteForceBudget;
  std::size_t cap = EnumerationLimits{}.max_order;
  bool json = false;
};

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string_view token(text.data() + pos, comma - pos);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw UsageError("malformed prime list '" + text + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

FiniteGroup load_group(const Options& opt) {
  EnumerationLimits limits;
  limits.max_order = opt.cap;
  return enumerate_group(parse_group_spec(opt.group), limits);
}

Analysis load_analysis(const Options& opt) {
  FiniteGroup group = load_group(opt);
  if (opt.table_file.empty()) return analyze(std::move(group), opt.group);
  std::ifstream in(opt.table_file);
  if (!in) throw UsageError("cannot read table file '" + opt.table_file + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError("table file is not valid JSON: " + std::string(ex.what()));
  }
  try {
    return analyze(std::move(group), opt.group, &doc);
  } catch (const CharacterTableError& ex) {
    throw UsageError(ex.what());
  }
}

std::vector<std::uint64_t> primes_or_all(const Options& opt, std::uint64_t order) {
  auto primes = opt.primes.empty() ? prime_divisors(order) : parse_primes(opt.primes);
  validate_primes(order, primes);
  return primes;
}

void emit(const Options& opt, const Json& json, const std::string& text) {
  if (opt.json) std::cout << json.dump(2) << "\n";
  else std::cout << text;
}

int run_classes(const Options& opt) {
  auto group = load_group(opt);
  ClassData classes(group);
  emit(opt, classes_json(group, classes, opt.group), classes_text(group, classes, opt.group));
  return kExitOk;
}

int run_chartable(const Options& opt) {
  auto a = load_analysis(opt);
  emit(opt, table_to_json(a.table), table_text(a.table));
  return kExitOk;
}

int run_blocks(const Options& opt) {
  auto a = load_analysis(opt);
  auto primes = primes_or_all(opt, a.group.order());
  emit(opt, blocks_json(a.table, a.classes, primes, a.label), blocks_text(a.table, a.classes, primes, a.label));
  return kExitOk;
}

int run_sections(const Options& opt) {
  auto a = load_analysis(opt);
  auto primes = primes_or_all(opt, a.group.order());
  auto json = sections_json(a.table, a.classes, primes, a.label);
  emit(opt, json, sections_text(a.table, a.classes, primes, a.label));
  for (const auto& entry : json["primes"])
    for (const auto& s : entry["sections"])
      if (s["membership_agrees"] == false) return kExitPropertyFailure;
  return kExitOk;
}

int run_verify(const Options& opt, bool sections) {
  auto a = load_analysis(opt);
  auto primes = primes_or_all(opt, a.group.order());
  VerifyOptions vopt{opt.budget};
  TheoremReport report;
  if (sections) {
    if (opt.sections.size() != primes.size())
      throw UsageError("verify-sections needs one -z section element per prime (" + std::to_string(primes.size()) + ")");
    std::vector<Elem> zs;
    for (const auto& z : opt.sections) zs.push_back(parse_element_spec(a.group, a.classes, z));
    report = verify_section_form(a.context(), primes, zs, vopt);
  } else {
    report = verify_regular_form(a.context(), primes, vopt);
  }
  emit(opt, theorem_json(report), theorem_text(report));
  return report.all_properties_hold() ? kExitOk : kExitPropertyFailure;
}

int run_frobenius(const Options& opt) {
  auto group = load_group(opt);
  ClassData classes(group);
  auto remark = divisibility_and_frobenius(classes, {}, nullptr);
  emit(opt, frobenius_json(remark, opt.group, group.order()), frobenius_text(remark, opt.group, group.order()));
  return remark.ok() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal p-blocks and factorization counts in finite groups"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--isa", isa, "Force the kernel instruction set")->check(CLI::IsMember({"scalar", "avx2"}));

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_table, bool with_primes) {
    sub->add_option("group", opt.group, "builtin:<name> or path to a group JSON file")->required();
    sub->add_option("--cap", opt.cap, "Maximum group order to enumerate");
    sub->add_flag("--json", opt.json, "Emit JSON instead of text");
    if (with_table) sub->add_option("--table", opt.table_file, "Use an imported character table (JSON)");
    if (with_primes) sub->add_option("-p,--primes", opt.primes, "Comma-separated distinct primes dividing |G|");
  };

  auto* classes = app.add_subcommand("classes", "Conjugacy classes");
  add_common(classes, false, false);
  auto* chartable = app.add_subcommand("chartable", "Exact character table");
  add_common(chartable, true, false);
  auto* blocks = app.add_subcommand("blocks", "Principal block membership");
  add_common(blocks, true, true);
  auto* sections = app.add_subcommand("sections", "p-sections and the section membership test");
  add_common(sections, true, true);
  auto* verify = app.add_subcommand("verify", "Check the p-regular factorization equivalence");
  add_common(verify, true, true);
  verify->add_option("--budget", opt.budget, "Brute-force tuple budget");
  auto* verify_sections = app.add_subcommand("verify-sections", "Check the p-section factorization equivalence");
  add_common(verify_sections, true, true);
  verify_sections->add_option("--budget", opt.budget, "Brute-force tuple budget");
  verify_sections->add_option("-z,--section", opt.sections,
                       "Section element per prime: class:<i>:rep, element:<i>, [images] or (cycles)");
  auto* frobenius = app.add_subcommand("frobenius", "Frobenius divisibility of p-regular counts");
  add_common(frobenius, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!isa.empty()) simd::set_active_isa(isa == "avx2" ? simd::Isa::avx2 : simd::Isa::scalar);
    if (*classes) return run_classes(opt);
    if (*chartable) return run_chartable(opt);
    if (*blocks) return run_blocks(opt);
    if (*sections) return run_sections(opt);
    if (*verify) return run_verify(opt, false);
    if (*verify_sections) return run_verify(opt, true);
    if (*frobenius) return run_frobenius(opt);
  } catch (const VerificationError& e) {
    std::cerr << "error: internal inconsistency: " << e.what() << "\n";
    return kExitPropertyFailure;
  } catch (const CharacterTableError& e) {
    std::cerr << "error: character table: " << e.what() << "\n";
    return kExitPropertyFailure;
  } catch (const std::exception& e) {
    // group, prime, section, table-import and parse errors
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
