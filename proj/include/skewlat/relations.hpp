#ifndef SKEWLAT_RELATIONS_HPP_
#define SKEWLAT_RELATIONS_HPP_

#include <string>
#include <vector>

#include "skewlat/algebra.hpp"

namespace skewlat {

// Relation over element ids, one bitrow per element. The storage convention
// throughout is contains(a, b) == "a below-or-related-to b": for orders the
// pair is stored as (smaller, larger).
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(int n) : n_(n), rows_(n) {}

  int size() const { return n_; }
  bool contains(ElementId a, ElementId b) const {
    return rows_[a].contains(b);
  }
  void add(ElementId a, ElementId b) { rows_[a].add(b); }
  ElemSet row(ElementId a) const { return rows_[a]; }

  bool reflexive() const;
  bool transitive() const;
  bool antisymmetric() const;
  bool symmetric() const;
  bool is_equivalence() const {
    return reflexive() && symmetric() && transitive();
  }
  bool is_partial_order() const {
    return reflexive() && antisymmetric() && transitive();
  }

  BinaryRelation compose(const BinaryRelation& other) const;
  BinaryRelation intersect(const BinaryRelation& other) const;
  BinaryRelation transpose() const;
  // Covering pairs of a partial order: strict part minus its square.
  BinaryRelation transitive_reduction() const;

  bool operator==(const BinaryRelation& other) const = default;

 private:
  int n_ = 0;
  std::vector<ElemSet> rows_;
};

// Blocks are listed by least member, and block_of is consistent with blocks.
struct Partition {
  int size = 0;
  std::vector<int> block_of;
  std::vector<ElemSet> blocks;

  static Partition from_equivalence(const BinaryRelation& rel);
  static Partition singletons(int n);
  int block_count() const { return static_cast<int>(blocks.size()); }
};

struct QuotientAlgebra {
  SkewLatticeAlgebra algebra;        // carrier = block indices
  std::vector<int> projection;       // element id -> block index
};

// Comparable D-class pair, upper strictly above lower in the class order.
struct ClassPair {
  int upper = 0;
  int lower = 0;
};

enum class Handedness { right, left, both, neither };

std::string to_string(Handedness h);

// x >= y iff x^y = y = y^x; stored as (y, x). Asserted to be a partial order.
BinaryRelation natural_leq(const SkewLatticeAlgebra& s);

// x >= y iff y^x^y = y; stored as (y, x). Cross-checked against the dual
// join form and asserted reflexive and transitive.
BinaryRelation natural_preorder(const SkewLatticeAlgebra& s);

BinaryRelation green_R(const SkewLatticeAlgebra& s);
BinaryRelation green_L(const SkewLatticeAlgebra& s);
// D = R o L = L o R, also the preorder intersected with its transpose; both
// identities asserted.
BinaryRelation green_D(const SkewLatticeAlgebra& s);

// Blocks of green_D; each block is asserted rectangular as a subalgebra.
Partition d_classes(const SkewLatticeAlgebra& s);

bool is_congruence(const SkewLatticeAlgebra& s, const Partition& p);

QuotientAlgebra quotient(const SkewLatticeAlgebra& s, const Partition& p);

Handedness handedness(const SkewLatticeAlgebra& s);

// Order between D-classes (block indices of d_classes): contains(b, a) means
// class b <= class a. Asserted to agree on every representative pair and to
// be the order of quotient(s, d_classes).
struct ClassOrder {
  Partition classes;
  BinaryRelation leq;     // over block indices
  BinaryRelation covers;  // transitive reduction of the strict part
};

ClassOrder class_order(const SkewLatticeAlgebra& s);

// Covering relation of natural_leq: contains(y, x) means y is covered by x.
BinaryRelation element_cover(const SkewLatticeAlgebra& s);

// Least-id b in class `block` with b <= a; requires D_a > block.
ElementId up_witness(const SkewLatticeAlgebra& s, const ClassOrder& co,
                     ElementId a, int block);

// For incomparable classes D_a and `block`: least-id b there with a v b = b v a
// and a ^ b = b ^ a. Existence asserted (skew diamond).
ElementId commuting_partner(const SkewLatticeAlgebra& s, const ClassOrder& co,
                            ElementId a, int block);

// Reconstruction sets of the skew diamond on two incomparable classes: the
// commuting joins and meets, asserted to fill the join and meet class
// exactly.
struct DiamondSets {
  int join_class = 0;
  int meet_class = 0;
  ElemSet join_set;
  ElemSet meet_set;
};

DiamondSets skew_diamond_sets(const SkewLatticeAlgebra& s, const ClassOrder& co,
                              int class_a, int class_b);

struct SecondDecomposition {
  QuotientAlgebra by_L;  // right-handed factor
  QuotientAlgebra by_R;  // left-handed factor
  SkewLatticeAlgebra fibred_product;
  IsoWitness iso;  // original -> fibred product
};

// Leech's second decomposition: S/L and S/R glued over S/D reconstruct S.
SecondDecomposition check_second_decomposition(const SkewLatticeAlgebra& s);

// Admissible Hasse diagram in DOT: solid directed edges for covers, dashed
// undirected paths through each multi-element D-class.
std::string hasse_dot(const SkewLatticeAlgebra& s);

}  // namespace skewlat

#endif  // SKEWLAT_RELATIONS_HPP_
