#ifndef SKEWLAT_ALGEBRA_HPP_
#define SKEWLAT_ALGEBRA_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewlat/elemset.hpp"

namespace skewlat {

// Total binary operation on [0, n); entry(x, y) is the product with x on the
// left. Carriers are capped at 64 so element sets and relation rows fit in a
// machine word.
class OpTable {
 public:
  OpTable() = default;
  OpTable(int n, std::vector<ElementId> entries);

  static OpTable from_rows(const std::vector<std::vector<ElementId>>& rows);

  int size() const { return n_; }
  ElementId operator()(ElementId x, ElementId y) const {
    return entries_[static_cast<std::size_t>(x) * n_ + y];
  }
  const std::vector<ElementId>& entries() const { return entries_; }

  bool operator==(const OpTable& other) const = default;

 private:
  int n_ = 0;
  std::vector<ElementId> entries_;
};

struct LawFailure {
  std::string law;
  std::vector<ElementId> witness;
};

// Outcome of checking the skew-lattice axioms. A structural problem (size
// mismatch, out-of-range entry) is reported separately from law failures;
// each failed law carries the first violating tuple in lexicographic scan
// order.
struct ValidationReport {
  bool passed = false;
  std::string structural_error;  // empty when tables are well formed
  std::vector<LawFailure> failures;

  bool structurally_ok() const { return structural_error.empty(); }
};

// Finite algebra with two operation tables. `validated` records that the
// skew-lattice axioms have been checked; every function in this library
// requires validated inputs unless stated otherwise. Display names are
// metadata only and never affect computation.
struct SkewLatticeAlgebra {
  int size = 0;
  std::vector<std::string> names;  // empty = unnamed
  OpTable meet;
  OpTable join;
  bool validated = false;

  ElementId meet_of(ElementId x, ElementId y) const { return meet(x, y); }
  ElementId join_of(ElementId x, ElementId y) const { return join(x, y); }

  ElementId meet3(ElementId x, ElementId y, ElementId z) const {
    return meet(meet(x, y), z);
  }
  ElementId join3(ElementId x, ElementId y, ElementId z) const {
    return join(join(x, y), z);
  }

  bool has_names() const { return !names.empty(); }
  std::string display(ElementId x) const {
    return has_names() ? names[x] : std::to_string(x);
  }
};

// Bijection witnessing an isomorphism: mapping[x] in T corresponds to x in S.
struct IsoWitness {
  std::vector<ElementId> mapping;
};

ValidationReport validate(const OpTable& meet, const OpTable& join);

// Builds a validated algebra or throws std::invalid_argument quoting the
// first failed law.
SkewLatticeAlgebra make_algebra(const OpTable& meet, const OpTable& join,
                                std::vector<std::string> names = {});

// L x R with (x,y) v (x',y') = (x',y) and (x,y) ^ (x',y') = (x,y'),
// flattened row-major.
SkewLatticeAlgebra make_rectangular(int l_size, int r_size);

SkewLatticeAlgebra direct_product(const SkewLatticeAlgebra& s,
                                  const SkewLatticeAlgebra& t);

// Named algebras: NC5R, NC5L (published tables, element order 0,a,b,c,1),
// chain_k (k >= 1), M2 (diamond), N5 (pentagon).
SkewLatticeAlgebra builtin(const std::string& name);

bool is_lattice(const SkewLatticeAlgebra& s);

std::optional<IsoWitness> find_isomorphism(const SkewLatticeAlgebra& s,
                                           const SkewLatticeAlgebra& t);

// Swaps meet and join. Involution; ideals of the dual are filters of the
// original.
SkewLatticeAlgebra dualize(const SkewLatticeAlgebra& s);

// Induced algebra on a subset closed under both operations. Element i of the
// result is the i-th member of `subset` in id order. Throws if not closed.
SkewLatticeAlgebra restrict_to(const SkewLatticeAlgebra& s, ElemSet subset);

// Internal consistency failure: a theorem of the underlying theory failed on
// a validated algebra, which indicates a library bug.
[[noreturn]] void internal_error(const std::string& what);

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) internal_error(what);
}

}  // namespace skewlat

#endif  // SKEWLAT_ALGEBRA_HPP_
