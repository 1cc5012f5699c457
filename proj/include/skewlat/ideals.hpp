#ifndef SKEWLAT_IDEALS_HPP_
#define SKEWLAT_IDEALS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "skewlat/relations.hpp"

namespace skewlat {

enum class IdealKind { ideal, filter, skew_ideal, skew_filter };

std::string to_string(IdealKind k);

// A subset of the carrier together with the closure notion it satisfies and,
// when it was produced by generation, the generators it came from.
struct IdealSet {
  IdealKind kind = IdealKind::ideal;
  ElemSet elements;
  std::optional<ElemSet> generators;
};

// The family of all ideals of one kind, ordered by inclusion. For ideals and
// filters this is always a lattice; for the skew families the `lattice`
// flag records whether every pairwise meet exists (two skew ideals can be
// disjoint, in which case they have no lower bound in the family).
struct IdealLattice {
  IdealKind kind = IdealKind::ideal;
  std::vector<IdealSet> members;     // sorted by bitmask value
  BinaryRelation inclusion;          // contains(i, j) iff members[i] <= members[j]
  std::vector<std::vector<int>> meet;  // -1 where no meet exists
  std::vector<std::vector<int>> join;
  bool lattice = false;

  int find(ElemSet elements) const;  // index or -1
};

// Nonempty, join-closed and preorder-down-closed. The three alternative
// criteria and the biconditional characterization are evaluated alongside the
// definition and asserted consistent.
bool is_ideal(const SkewLatticeAlgebra& s, ElemSet x);
bool is_filter(const SkewLatticeAlgebra& s, ElemSet x);

// Nonempty, join-closed and <=-down-closed; the y^x^y criterion is asserted
// to agree, and positive answers are asserted to be subalgebras.
bool is_skew_ideal(const SkewLatticeAlgebra& s, ElemSet x);
bool is_skew_filter(const SkewLatticeAlgebra& s, ElemSet x);

IdealSet generated_ideal(const SkewLatticeAlgebra& s, ElemSet x);
IdealSet generated_filter(const SkewLatticeAlgebra& s, ElemSet x);
IdealSet generated_skew_ideal(const SkewLatticeAlgebra& s, ElemSet x);
IdealSet generated_skew_filter(const SkewLatticeAlgebra& s, ElemSet x);

// S^x^S, asserted equal to the preorder down-set of x and to generation
// from {x}; similarly for the other three principal sets.
IdealSet principal_ideal(const SkewLatticeAlgebra& s, ElementId x);
IdealSet principal_filter(const SkewLatticeAlgebra& s, ElementId x);
IdealSet principal_skew_ideal(const SkewLatticeAlgebra& s, ElementId x);
IdealSet principal_skew_filter(const SkewLatticeAlgebra& s, ElementId x);

IdealLattice enumerate_ideals(const SkewLatticeAlgebra& s);
IdealLattice enumerate_filters(const SkewLatticeAlgebra& s);
IdealLattice enumerate_skew_ideals(const SkewLatticeAlgebra& s);
IdealLattice enumerate_skew_filters(const SkewLatticeAlgebra& s);

// Builds x-down-star in stages along covering pairs; asserted equal to
// principal_skew_ideal.
IdealSet recursive_principal_skew_ideal(const SkewLatticeAlgebra& s,
                                        ElementId x);

// x^(yvz)^x = (x^y^x)v(x^z^x) for all triples.
bool is_meet_distributive(const SkewLatticeAlgebra& s);

// Meet distributes over join on both sides without the outer sandwich:
// x^(yvz) = (x^y)v(x^z) and (yvz)^x = (y^x)v(z^x). This is the hypothesis
// under which the finite-join description of generated skew ideals holds.
bool is_fully_meet_distributive(const SkewLatticeAlgebra& s);

// All joins x1 v ... v xk of elements below members of X. Equals the
// generated skew ideal on meet-distributive algebras.
ElemSet finite_join_closure_of_downset(const SkewLatticeAlgebra& s, ElemSet x);

}  // namespace skewlat

#endif  // SKEWLAT_IDEALS_HPP_
