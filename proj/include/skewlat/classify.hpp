#ifndef SKEWLAT_CLASSIFY_HPP_
#define SKEWLAT_CLASSIFY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewlat/cosets.hpp"

namespace skewlat {

// One identity-defined property: verdict plus, when false, the first
// violating tuple in lexicographic scan order. Witnesses replay against the
// tables.
struct PropertyValue {
  bool holds = false;
  std::vector<ElementId> witness;  // empty when holds
};

using PropertyReport = std::map<std::string, PropertyValue>;

// Exhaustive identity sweeps: symmetric, normal, conormal, binormal,
// distributive, quasi_distributive, meet_distributive, rectangular,
// skew_chain, right_handed, left_handed.
PropertyReport properties(const SkewLatticeAlgebra& s);

// Union of singleton D-classes; empty is allowed. When nonempty it is
// asserted to be a normal subalgebra, and on normal algebras its class image
// is asserted to be a lattice ideal of S/D.
ElemSet center(const SkewLatticeAlgebra& s);

// All transversals of the D-classes that are subalgebras; each is asserted
// isomorphic to S/D.
std::vector<ElemSet> lattice_sections(const SkewLatticeAlgebra& s);

struct SkewBooleanStructure {
  ElementId zero = 0;
  OpTable difference;
};

struct SkewBooleanOutcome {
  std::optional<SkewBooleanStructure> structure;
  bool has_zero = false;
  bool preconditions_ok = false;  // distributive + normal + symmetric
  // When solving fails: the offending pair and how many solutions it had.
  std::optional<std::pair<ElementId, ElementId>> failing_pair;
  int solutions_at_failure = 0;
};

// Detects the zero, requires the skew-Boolean variety identities, and solves
// (x^y^x) v z = x, (x^y^x) ^ z = 0 for each pair; the outcome is
// cross-checked against the principal-ideal characterization (symmetric with
// zero and every x-down-star a Boolean lattice).
SkewBooleanOutcome skew_boolean_structure(const SkewLatticeAlgebra& s);

struct ScheinFactorization {
  SkewLatticeAlgebra lattice_factor;
  SkewLatticeAlgebra rectangular_factor;
  IsoWitness iso;  // original -> product(lattice, rectangular)
  int class_used = 0;
};

// Binormal algebras factor as lattice x rectangular; the rectangular factor
// is searched among the D-classes, the lattice factor is S/D.
std::optional<ScheinFactorization> schein_factorization(
    const SkewLatticeAlgebra& s);

// Identity-based normality, commutativity of every x-down-star, and the
// single-coset condition, asserted pairwise equal; under normality the
// distributivity equivalences are asserted as well.
bool normality_cross_checks(const SkewLatticeAlgebra& s);

// Helpers shared with the harness.
bool subalgebra_is_commutative(const SkewLatticeAlgebra& s, ElemSet subset);
bool sub_lattice_is_distributive(const SkewLatticeAlgebra& s, ElemSet subset);
bool sub_lattice_is_boolean(const SkewLatticeAlgebra& s, ElemSet subset,
                            ElementId zero, ElementId top);
std::optional<ElementId> detect_zero(const SkewLatticeAlgebra& s);

}  // namespace skewlat

#endif  // SKEWLAT_CLASSIFY_HPP_
