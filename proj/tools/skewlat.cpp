#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "skewlat/enumerate.hpp"
#include "skewlat/io.hpp"
#include "skewlat/report.hpp"

namespace {

using namespace skewlat;

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitStructural = 2;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write to " + path);
  out << content;
}

std::string format_set(const SkewLatticeAlgebra& s, ElemSet set) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : set.to_vector()) {
    out += (first ? "" : ",") + s.display(x);
    first = false;
  }
  return out + "}";
}

int cmd_validate(const std::string& path) {
  // Report all failed laws with their first witnesses on stderr.
  try {
    load_algebra_argument(path);
  } catch (const AlgebraFileError& e) {
    std::cerr << e.what() << "\n";
    return e.kind == AlgebraFileError::Kind::law ? kExitLawFailure
                                                 : kExitStructural;
  }
  return kExitOk;
}

int cmd_info(const std::string& path, const std::string& format) {
  SkewLatticeAlgebra s = load_algebra_argument(path);
  std::cout << (format == "json" ? info_report_json(s) : info_report_text(s));
  return kExitOk;
}

int cmd_check(const std::string& path, const std::string& format) {
  SkewLatticeAlgebra s = load_algebra_argument(path);
  std::cout << (format == "json" ? check_report_json(s)
                                 : check_report_text(s));
  return theorem_harness(s).all_passed ? kExitOk : kExitLawFailure;
}

int cmd_ideals(const std::string& path, bool skew, bool filters,
               const std::string& principal, bool count) {
  SkewLatticeAlgebra s = load_algebra_argument(path);
  if (count) {
    IdealLattice skews = enumerate_skew_ideals(s);
    std::cout << "ideals " << enumerate_ideals(s).members.size() << "\n"
              << "filters " << enumerate_filters(s).members.size() << "\n"
              << "skew_ideals " << skews.members.size() << "\n"
              << "skew_filters " << enumerate_skew_filters(s).members.size()
              << "\n";
    if (find_isomorphism(s, builtin("NC5L")) && skews.members.size() != 9)
      std::cout << "# note: prose claims 9 skew ideals; exhaustive "
                   "enumeration finds "
                << skews.members.size() << "\n";
    return kExitOk;
  }
  if (!principal.empty()) {
    const ElementId x = resolve_element(s, principal);
    IdealSet set = skew ? (filters ? principal_skew_filter(s, x)
                                   : principal_skew_ideal(s, x))
                        : (filters ? principal_filter(s, x)
                                   : principal_ideal(s, x));
    std::cout << format_set(s, set.elements) << "\n";
    return kExitOk;
  }
  IdealLattice fam = skew ? (filters ? enumerate_skew_filters(s)
                                     : enumerate_skew_ideals(s))
                          : (filters ? enumerate_filters(s)
                                     : enumerate_ideals(s));
  for (const IdealSet& member : fam.members)
    std::cout << format_set(s, member.elements) << "\n";
  return kExitOk;
}

int cmd_cosets(const std::string& path, const std::string& upper,
               const std::string& lower) {
  SkewLatticeAlgebra s = load_algebra_argument(path);
  ClassOrder co = class_order(s);
  const int cu = co.classes.block_of[resolve_element(s, upper)];
  const int cl = co.classes.block_of[resolve_element(s, lower)];
  ClassPair pair = make_class_pair(co, cu, cl);

  std::cout << "upper class " << format_set(s, co.classes.blocks[cu]) << "\n";
  std::cout << "lower class " << format_set(s, co.classes.blocks[cl]) << "\n";
  CosetDecomposition dec = coset_partition(s, co, pair);
  std::cout << "cosets in lower:";
  for (const Coset& c : dec.in_lower) std::cout << " " << format_set(s, c.elements);
  std::cout << "\ncosets in upper:";
  for (const Coset& c : dec.in_upper) std::cout << " " << format_set(s, c.elements);
  std::cout << "\n";
  const int down =
      coset_index(s, co, pair, IndexDirection::upper_in_lower).value;
  const int up = coset_index(s, co, pair, IndexDirection::lower_in_upper).value;
  std::cout << "indices [B:A]=" << down << " [A:B]=" << up << "\n";
  for (const Coset& cup : dec.in_upper)
    for (const Coset& cdown : dec.in_lower) {
      CosetBijection bij = coset_bijection(s, co, cup, cdown);
      std::cout << "bijection " << format_set(s, cup.elements) << " -> "
                << format_set(s, cdown.elements) << ":";
      for (auto [x, y] : bij.mapping)
        std::cout << " " << s.display(x) << ">=" << s.display(y);
      std::cout << "\n";
    }
  return kExitOk;
}

int cmd_hasse(const std::string& path, const std::string& out) {
  SkewLatticeAlgebra s = load_algebra_argument(path);
  write_output(out, hasse_dot(s));
  return kExitOk;
}

int cmd_quotient(const std::string& path, const std::string& rel,
                 const std::string& out) {
  SkewLatticeAlgebra s = load_algebra_argument(path);
  Partition p;
  if (rel == "D")
    p = d_classes(s);
  else if (rel == "R")
    p = Partition::from_equivalence(green_R(s));
  else if (rel == "L")
    p = Partition::from_equivalence(green_L(s));
  else
    throw CLI::ValidationError("--rel must be one of D, R, L");
  write_output(out, print_algebra(quotient(s, p).algebra));
  return kExitOk;
}

int cmd_enumerate(const EnumerationSpec& spec, const std::string& emit_dir) {
  std::vector<SkewLatticeAlgebra> found = enumerate_all(spec);
  if (!emit_dir.empty()) {
    for (const SkewLatticeAlgebra& a : found) {
      std::vector<std::uint8_t> key = canonical_key(a);
      std::string hex;
      for (std::uint8_t b : key) {
        hex += "0123456789abcdef"[b >> 4];
        hex += "0123456789abcdef"[b & 15];
      }
      std::ofstream file(emit_dir + "/n" + std::to_string(spec.order) + "_" +
                         hex + ".skl");
      if (!file) throw std::runtime_error("cannot write into " + emit_dir);
      file << print_algebra(a);
    }
  }
  std::cout << "count " << found.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite skew lattice toolkit"};
  app.require_subcommand(1);

  std::string path, format = "text", out, principal, upper, lower, rel = "D";
  std::string emit_dir;
  bool skew = false, filters = false, count = false;
  EnumerationSpec spec;
  long long limit = -1;

  CLI::App* validate = app.add_subcommand("validate", "check the axioms");
  validate->add_option("path", path)->required();

  CLI::App* info = app.add_subcommand("info", "structure report");
  info->add_option("path", path)->required();
  info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* check = app.add_subcommand("check", "run the proposition battery");
  check->add_option("path", path)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* ideals = app.add_subcommand("ideals", "list ideal families");
  ideals->add_option("path", path)->required();
  ideals->add_flag("--skew", skew);
  ideals->add_flag("--filters", filters);
  ideals->add_option("--principal", principal);
  ideals->add_flag("--count", count);

  CLI::App* cosets = app.add_subcommand("cosets", "coset geometry of a pair");
  cosets->add_option("path", path)->required();
  cosets->add_option("--upper", upper)->required();
  cosets->add_option("--lower", lower)->required();

  CLI::App* hasse = app.add_subcommand("hasse", "admissible Hasse diagram");
  hasse->add_option("path", path)->required();
  hasse->add_option("-o,--output", out);

  CLI::App* quot = app.add_subcommand("quotient", "quotient by D, R or L");
  quot->add_option("path", path)->required();
  quot->add_option("--rel", rel)->check(CLI::IsMember({"D", "R", "L"}));
  quot->add_option("-o,--output", out);

  CLI::App* enumerate = app.add_subcommand("enumerate", "generate all algebras");
  enumerate->add_option("--order", spec.order)->required();
  enumerate->add_flag("--right-handed", spec.right_handed);
  enumerate->add_flag("--left-handed", spec.left_handed);
  enumerate->add_flag("--normal", spec.normal);
  enumerate->add_flag("--symmetric", spec.symmetric);
  enumerate->add_flag("--up-to-iso", spec.up_to_iso);
  enumerate->add_option("--limit", limit);
  enumerate->add_option("--threads", spec.threads);
  enumerate->add_option("--emit", emit_dir);
  enumerate->add_option("--exhaustive-cap", spec.max_exhaustive_order);
  enumerate->add_option("--restricted-cap", spec.max_restricted_order);

  try {
    app.parse(argc, argv);
    if (limit >= 0) spec.limit = limit;
    if (validate->parsed()) return cmd_validate(path);
    if (info->parsed()) return cmd_info(path, format);
    if (check->parsed()) return cmd_check(path, format);
    if (ideals->parsed())
      return cmd_ideals(path, skew, filters, principal, count);
    if (cosets->parsed()) return cmd_cosets(path, upper, lower);
    if (hasse->parsed()) return cmd_hasse(path, out);
    if (quot->parsed()) return cmd_quotient(path, rel, out);
    if (enumerate->parsed()) return cmd_enumerate(spec, emit_dir);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitStructural;
  } catch (const AlgebraFileError& e) {
    std::cerr << e.what() << "\n";
    return e.kind == AlgebraFileError::Kind::law ? kExitLawFailure
                                                 : kExitStructural;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitStructural;
  }
  return kExitStructural;
}
