#ifndef SKEWLAT_HARNESS_HPP_
#define SKEWLAT_HARNESS_HPP_

#include <string>
#include <vector>

#include "skewlat/classify.hpp"

namespace skewlat {

struct PropOutcome {
  std::string name;
  bool passed = false;
  std::string detail;  // failure description or note
};

// Result of running the full proposition battery on one algebra. Mismatch
// notes record places where an exhaustive computation contradicts a prose
// claim of the source material; they are not failures.
struct AlgebraCheckReport {
  std::vector<PropOutcome> propositions;
  std::vector<std::string> mismatch_notes;
  bool all_passed = true;

  void record(const std::string& name, bool ok, const std::string& detail = "");
};

// Runs every order, ideal, coset, and classification proposition against one
// validated algebra by exhaustive evaluation. Subset-quantified checks are
// skipped above `subset_check_limit` carrier size (they scan 2^n subsets).
AlgebraCheckReport theorem_harness(const SkewLatticeAlgebra& s,
                                   int subset_check_limit = 6);

}  // namespace skewlat

#endif  // SKEWLAT_HARNESS_HPP_
