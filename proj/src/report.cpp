#include "skewlat/report.hpp"

#include <sstream>

#include "json.hpp"
#include "skewlat/enumerate.hpp"
#include "skewlat/ideals.hpp"

namespace skewlat {

namespace {

using nlohmann::json;

json element_list(const SkewLatticeAlgebra& s, ElemSet set) {
  json out = json::array();
  for (ElementId x : set.to_vector()) out.push_back(s.display(x));
  return out;
}

json structure_json(const SkewLatticeAlgebra& s) {
  json out;
  out["size"] = s.size;
  if (s.has_names()) out["names"] = s.names;
  out["handedness"] = to_string(handedness(s));
  out["is_lattice"] = is_lattice(s);

  ClassOrder co = class_order(s);
  json classes = json::array();
  for (const ElemSet& block : co.classes.blocks)
    classes.push_back(element_list(s, block));
  out["d_classes"] = classes;

  json covers = json::array();
  const int m = co.classes.block_count();
  for (int lo = 0; lo < m; ++lo)
    for (int hi = 0; hi < m; ++hi)
      if (co.covers.contains(lo, hi)) covers.push_back({lo, hi});
  out["class_cover_pairs"] = covers;

  json props;
  for (const auto& [name, value] : properties(s)) {
    props[name] = value.holds;
    if (!value.holds) props[name + "_witness"] = value.witness;
  }
  out["properties"] = props;

  out["center"] = element_list(s, center(s));
  if (s.size <= 16) {
    out["ideal_counts"] = {
        {"ideals", enumerate_ideals(s).members.size()},
        {"filters", enumerate_filters(s).members.size()},
        {"skew_ideals", enumerate_skew_ideals(s).members.size()},
        {"skew_filters", enumerate_skew_filters(s).members.size()}};
  } else {
    out["ideal_counts"] = "skipped (carrier too large)";
  }

  json indices = json::array();
  for (int hi = 0; hi < m; ++hi)
    for (int lo = 0; lo < m; ++lo) {
      if (hi == lo || !co.leq.contains(lo, hi)) continue;
      ClassPair pair = make_class_pair(co, hi, lo);
      indices.push_back(
          {{"upper", hi},
           {"lower", lo},
           {"upper_in_lower",
            coset_index(s, co, pair, IndexDirection::upper_in_lower).value},
           {"lower_in_upper",
            coset_index(s, co, pair, IndexDirection::lower_in_upper).value}});
    }
  out["coset_indices"] = indices;
  out["is_categorical"] = is_categorical(s);
  out["is_strictly_categorical"] = is_strictly_categorical(s);
  return out;
}

json harness_json(const AlgebraCheckReport& report) {
  json out;
  out["passed"] = report.all_passed;
  json props;
  for (const PropOutcome& p : report.propositions) {
    if (p.passed && p.detail.empty()) {
      props[p.name] = true;
    } else {
      json entry;
      entry["passed"] = p.passed;
      if (!p.detail.empty()) entry["detail"] = p.detail;
      props[p.name] = entry;
    }
  }
  out["propositions"] = props;
  out["mismatch_notes"] = report.mismatch_notes;
  return out;
}

}  // namespace

std::string info_report_json(const SkewLatticeAlgebra& s) {
  json out = structure_json(s);
  out["check"] = harness_json(theorem_harness(s));
  return out.dump(2) + "\n";
}

std::string info_report_text(const SkewLatticeAlgebra& s) {
  std::ostringstream out;
  out << "size: " << s.size << "\n";
  out << "handedness: " << to_string(handedness(s)) << "\n";
  out << "lattice: " << (is_lattice(s) ? "yes" : "no") << "\n";
  ClassOrder co = class_order(s);
  out << "d-classes:";
  for (const ElemSet& block : co.classes.blocks) {
    out << " {";
    bool first = true;
    for (ElementId x : block.to_vector()) {
      out << (first ? "" : ",") << s.display(x);
      first = false;
    }
    out << "}";
  }
  out << "\n";
  out << "properties:";
  for (const auto& [name, value] : properties(s))
    if (value.holds) out << " " << name;
  out << "\n";
  if (s.size <= 16)
    out << "ideals: " << enumerate_ideals(s).members.size()
        << "  filters: " << enumerate_filters(s).members.size()
        << "  skew ideals: " << enumerate_skew_ideals(s).members.size()
        << "  skew filters: " << enumerate_skew_filters(s).members.size()
        << "\n";
  AlgebraCheckReport harness = theorem_harness(s);
  out << "propositions: " << (harness.all_passed ? "all pass" : "FAILURES")
      << "\n";
  for (const PropOutcome& p : harness.propositions)
    if (!p.passed) out << "  fail: " << p.name << " " << p.detail << "\n";
  for (const std::string& note : harness.mismatch_notes)
    out << "note: " << note << "\n";
  return out.str();
}

std::string check_report_json(const SkewLatticeAlgebra& s) {
  json out;
  out["check"] = harness_json(theorem_harness(s));
  return out.dump(2) + "\n";
}

std::string check_report_text(const SkewLatticeAlgebra& s) {
  std::ostringstream out;
  AlgebraCheckReport report = theorem_harness(s);
  for (const PropOutcome& p : report.propositions) {
    out << (p.passed ? "pass" : "FAIL") << "  " << p.name;
    if (!p.detail.empty()) out << "  (" << p.detail << ")";
    out << "\n";
  }
  for (const std::string& note : report.mismatch_notes)
    out << "note  " << note << "\n";
  out << (report.all_passed ? "all propositions pass" : "proposition failures")
      << "\n";
  return out.str();
}

}  // namespace skewlat
