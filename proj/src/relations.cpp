#include "skewlat/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace skewlat {

bool BinaryRelation::reflexive() const {
  for (ElementId x = 0; x < n_; ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool BinaryRelation::transitive() const {
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b : rows_[a].to_vector())
      if (!rows_[b].subset_of(rows_[a])) return false;
  return true;
}

bool BinaryRelation::antisymmetric() const {
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b : rows_[a].to_vector())
      if (a != b && contains(b, a)) return false;
  return true;
}

bool BinaryRelation::symmetric() const {
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b : rows_[a].to_vector())
      if (!contains(b, a)) return false;
  return true;
}

BinaryRelation BinaryRelation::compose(const BinaryRelation& other) const {
  // (a,c) iff exists b with (a,b) here and (b,c) there.
  BinaryRelation out(n_);
  for (ElementId a = 0; a < n_; ++a) {
    ElemSet acc;
    for (ElementId b : rows_[a].to_vector()) acc = acc | other.rows_[b];
    out.rows_[a] = acc;
  }
  return out;
}

BinaryRelation BinaryRelation::intersect(const BinaryRelation& other) const {
  BinaryRelation out(n_);
  for (ElementId a = 0; a < n_; ++a) out.rows_[a] = rows_[a] & other.rows_[a];
  return out;
}

BinaryRelation BinaryRelation::transpose() const {
  BinaryRelation out(n_);
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b : rows_[a].to_vector()) out.add(b, a);
  return out;
}

BinaryRelation BinaryRelation::transitive_reduction() const {
  BinaryRelation out(n_);
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b : rows_[a].to_vector()) {
      if (a == b) continue;
      bool direct = true;
      for (ElementId w : rows_[a].to_vector())
        if (w != a && w != b && contains(w, b)) {
          direct = false;
          break;
        }
      if (direct) out.add(a, b);
    }
  return out;
}

Partition Partition::from_equivalence(const BinaryRelation& rel) {
  const int n = rel.size();
  Partition p;
  p.size = n;
  p.block_of.assign(n, -1);
  for (ElementId x = 0; x < n; ++x) {
    if (p.block_of[x] != -1) continue;
    const int idx = static_cast<int>(p.blocks.size());
    p.blocks.push_back(rel.row(x));
    for (ElementId y : rel.row(x).to_vector()) p.block_of[y] = idx;
  }
  return p;
}

Partition Partition::singletons(int n) {
  Partition p;
  p.size = n;
  p.block_of.resize(n);
  for (ElementId x = 0; x < n; ++x) {
    p.block_of[x] = x;
    p.blocks.push_back(ElemSet::single(x));
  }
  return p;
}

std::string to_string(Handedness h) {
  switch (h) {
    case Handedness::right: return "right";
    case Handedness::left: return "left";
    case Handedness::both: return "both";
    case Handedness::neither: return "neither";
  }
  return "?";
}

namespace {

void require_validated(const SkewLatticeAlgebra& s, const char* who) {
  if (!s.validated)
    throw std::invalid_argument(std::string(who) +
                                " requires a validated algebra");
}

}  // namespace

BinaryRelation natural_leq(const SkewLatticeAlgebra& s) {
  require_validated(s, "natural_leq");
  BinaryRelation rel(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.meet_of(x, y) == y && s.meet_of(y, x) == y) rel.add(y, x);
  // y <= x also reads x v y = x = y v x; both forms must agree.
  BinaryRelation dual(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.join_of(x, y) == x && s.join_of(y, x) == x) dual.add(y, x);
  internal_check(rel == dual, "meet and join forms of <= disagree");
  internal_check(rel.is_partial_order(), "natural <= is not a partial order");
  return rel;
}

BinaryRelation natural_preorder(const SkewLatticeAlgebra& s) {
  require_validated(s, "natural_preorder");
  BinaryRelation rel(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.meet3(y, x, y) == y) rel.add(y, x);
  BinaryRelation dual(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.join3(x, y, x) == x) dual.add(y, x);
  internal_check(rel == dual, "meet and join forms of preorder disagree");
  internal_check(rel.reflexive() && rel.transitive(),
                 "natural preorder is not reflexive-transitive");
  return rel;
}

BinaryRelation green_R(const SkewLatticeAlgebra& s) {
  require_validated(s, "green_R");
  BinaryRelation rel(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.meet_of(x, y) == y && s.meet_of(y, x) == x) rel.add(x, y);
  // R under meet is L under join.
  BinaryRelation dual(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.join_of(x, y) == x && s.join_of(y, x) == y) dual.add(x, y);
  internal_check(rel == dual, "R(meet) differs from L(join)");
  internal_check(rel.is_equivalence(), "R is not an equivalence");
  return rel;
}

BinaryRelation green_L(const SkewLatticeAlgebra& s) {
  require_validated(s, "green_L");
  BinaryRelation rel(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.meet_of(x, y) == x && s.meet_of(y, x) == y) rel.add(x, y);
  BinaryRelation dual(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.join_of(x, y) == y && s.join_of(y, x) == x) dual.add(x, y);
  internal_check(rel == dual, "L(meet) differs from R(join)");
  internal_check(rel.is_equivalence(), "L is not an equivalence");
  return rel;
}

BinaryRelation green_D(const SkewLatticeAlgebra& s) {
  require_validated(s, "green_D");
  BinaryRelation rel(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.meet3(x, y, x) == x && s.meet3(y, x, y) == y) rel.add(x, y);
  internal_check(rel.is_equivalence(), "D is not an equivalence");

  BinaryRelation r = green_R(s), l = green_L(s);
  internal_check(r.compose(l) == rel && l.compose(r) == rel,
                 "D != R o L or D != L o R");
  BinaryRelation pre = natural_preorder(s);
  internal_check(pre.intersect(pre.transpose()) == rel,
                 "D differs from preorder meet its transpose");
  // D under join: x v y v x = x and y v x v y = y.
  BinaryRelation dual(s.size);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      if (s.join3(x, y, x) == x && s.join3(y, x, y) == y) dual.add(x, y);
  internal_check(rel == dual, "D(meet) differs from D(join)");
  return rel;
}

Partition d_classes(const SkewLatticeAlgebra& s) {
  Partition p = Partition::from_equivalence(green_D(s));
  // Each class is a maximal rectangular subalgebra: x ^ y ^ x = x inside it.
  for (const ElemSet& block : p.blocks)
    for (ElementId x : block.to_vector())
      for (ElementId y : block.to_vector()) {
        internal_check(block.contains(s.meet_of(x, y)) &&
                           block.contains(s.join_of(x, y)),
                       "D-class is not closed under the operations");
        internal_check(s.meet3(x, y, x) == x && s.join3(x, y, x) == x,
                       "D-class is not rectangular");
      }
  return p;
}

bool is_congruence(const SkewLatticeAlgebra& s, const Partition& p) {
  require_validated(s, "is_congruence");
  if (p.size != s.size) throw std::invalid_argument("partition size mismatch");
  // Single-substitution compatibility suffices for binary operations.
  for (const ElemSet& block : p.blocks) {
    const std::vector<ElementId> members = block.to_vector();
    for (std::size_t i = 1; i < members.size(); ++i) {
      const ElementId x = members[0], x2 = members[i];
      for (ElementId y = 0; y < s.size; ++y) {
        if (p.block_of[s.meet_of(x, y)] != p.block_of[s.meet_of(x2, y)] ||
            p.block_of[s.meet_of(y, x)] != p.block_of[s.meet_of(y, x2)] ||
            p.block_of[s.join_of(x, y)] != p.block_of[s.join_of(x2, y)] ||
            p.block_of[s.join_of(y, x)] != p.block_of[s.join_of(y, x2)])
          return false;
      }
    }
  }
  return true;
}

QuotientAlgebra quotient(const SkewLatticeAlgebra& s, const Partition& p) {
  if (!is_congruence(s, p))
    throw std::invalid_argument("quotient requires a congruence");
  const int m = p.block_count();
  std::vector<ElementId> meet(static_cast<std::size_t>(m) * m);
  std::vector<ElementId> join(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const ElementId x = p.blocks[a].least();
      const ElementId y = p.blocks[b].least();
      meet[static_cast<std::size_t>(a) * m + b] = p.block_of[s.meet_of(x, y)];
      join[static_cast<std::size_t>(a) * m + b] = p.block_of[s.join_of(x, y)];
    }
  QuotientAlgebra q{make_algebra(OpTable(m, meet), OpTable(m, join)),
                    p.block_of};
  return q;
}

Handedness handedness(const SkewLatticeAlgebra& s) {
  require_validated(s, "handedness");
  bool right = true, left = true;
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y) {
      right = right && s.meet3(x, y, x) == s.meet_of(y, x);
      left = left && s.meet3(x, y, x) == s.meet_of(x, y);
    }
  // Join-side forms of the same identities.
  bool right_j = true, left_j = true;
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y) {
      right_j = right_j && s.join3(x, y, x) == s.join_of(x, y);
      left_j = left_j && s.join3(x, y, x) == s.join_of(y, x);
    }
  internal_check(right == right_j && left == left_j,
                 "meet and join handedness identities disagree");
  internal_check((right && left) == is_lattice(s),
                 "two-sided handedness must mean commutativity");
  if (right && left) return Handedness::both;
  if (right) return Handedness::right;
  if (left) return Handedness::left;
  return Handedness::neither;
}

ClassOrder class_order(const SkewLatticeAlgebra& s) {
  ClassOrder co;
  co.classes = d_classes(s);
  const int m = co.classes.block_count();
  BinaryRelation pre = natural_preorder(s);

  co.leq = BinaryRelation(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const ElementId x = co.classes.blocks[a].least();
      const ElementId y = co.classes.blocks[b].least();
      if (pre.contains(x, y)) co.leq.add(a, b);
    }
  // The order must not depend on the chosen representatives.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (ElementId x : co.classes.blocks[a].to_vector())
        for (ElementId y : co.classes.blocks[b].to_vector())
          internal_check(pre.contains(x, y) == co.leq.contains(a, b),
                         "class order depends on representatives");
  internal_check(co.leq.is_partial_order(), "class order is not an order");

  // Same order as the maximal lattice image.
  QuotientAlgebra q = quotient(s, co.classes);
  internal_check(is_lattice(q.algebra), "S/D is not a lattice");
  BinaryRelation qleq = natural_leq(q.algebra);
  internal_check(qleq == co.leq, "class order differs from S/D order");

  co.covers = co.leq.transitive_reduction();
  return co;
}

BinaryRelation element_cover(const SkewLatticeAlgebra& s) {
  return natural_leq(s).transitive_reduction();
}

ElementId up_witness(const SkewLatticeAlgebra& s, const ClassOrder& co,
                     ElementId a, int block) {
  const int ca = co.classes.block_of[a];
  if (ca == block || !co.leq.contains(block, ca))
    throw std::invalid_argument("up_witness requires D_a strictly above block");
  BinaryRelation leq = natural_leq(s);
  for (ElementId b : co.classes.blocks[block].to_vector())
    if (leq.contains(b, a)) return b;
  internal_error("no witness below a in a comparable class");
}

ElementId commuting_partner(const SkewLatticeAlgebra& s, const ClassOrder& co,
                            ElementId a, int block) {
  const int ca = co.classes.block_of[a];
  if (ca == block || co.leq.contains(block, ca) || co.leq.contains(ca, block))
    throw std::invalid_argument(
        "commuting_partner requires incomparable classes");
  for (ElementId b : co.classes.blocks[block].to_vector())
    if (s.join_of(a, b) == s.join_of(b, a) &&
        s.meet_of(a, b) == s.meet_of(b, a))
      return b;
  internal_error("skew diamond has no commuting partner");
}

DiamondSets skew_diamond_sets(const SkewLatticeAlgebra& s, const ClassOrder& co,
                              int class_a, int class_b) {
  if (co.leq.contains(class_a, class_b) || co.leq.contains(class_b, class_a))
    throw std::invalid_argument("skew diamond requires incomparable classes");
  DiamondSets out;
  const ElementId ra = co.classes.blocks[class_a].least();
  const ElementId rb = co.classes.blocks[class_b].least();
  out.join_class = co.classes.block_of[s.join_of(ra, rb)];
  out.meet_class = co.classes.block_of[s.meet_of(ra, rb)];
  for (ElementId a : co.classes.blocks[class_a].to_vector())
    for (ElementId b : co.classes.blocks[class_b].to_vector()) {
      if (s.join_of(a, b) == s.join_of(b, a))
        out.join_set.add(s.join_of(a, b));
      if (s.meet_of(a, b) == s.meet_of(b, a))
        out.meet_set.add(s.meet_of(a, b));
    }
  internal_check(out.join_set == co.classes.blocks[out.join_class],
                 "commuting joins do not fill the join class");
  internal_check(out.meet_set == co.classes.blocks[out.meet_class],
                 "commuting meets do not fill the meet class");
  return out;
}

SecondDecomposition check_second_decomposition(const SkewLatticeAlgebra& s) {
  require_validated(s, "check_second_decomposition");
  Partition r_classes = Partition::from_equivalence(green_R(s));
  Partition l_classes = Partition::from_equivalence(green_L(s));

  SecondDecomposition out{quotient(s, l_classes), quotient(s, r_classes), {},
                          {}};
  internal_check(handedness(out.by_L.algebra) == Handedness::right ||
                     handedness(out.by_L.algebra) == Handedness::both,
                 "S/L is not right-handed");
  internal_check(handedness(out.by_R.algebra) == Handedness::left ||
                     handedness(out.by_R.algebra) == Handedness::both,
                 "S/R is not left-handed");

  // Fibred product over S/D: pairs of an L-class and an R-class lying in the
  // same D-class, with componentwise operations.
  Partition d = d_classes(s);
  const int nl = out.by_L.algebra.size;
  const int nr = out.by_R.algebra.size;
  std::vector<int> l_to_d(nl), r_to_d(nr);
  for (int i = 0; i < nl; ++i) l_to_d[i] = d.block_of[l_classes.blocks[i].least()];
  for (int i = 0; i < nr; ++i) r_to_d[i] = d.block_of[r_classes.blocks[i].least()];

  std::vector<std::pair<int, int>> carrier;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j)
      if (l_to_d[i] == r_to_d[j]) {
        index[{i, j}] = static_cast<int>(carrier.size());
        carrier.emplace_back(i, j);
      }
  const int n = static_cast<int>(carrier.size());
  internal_check(n == s.size, "fibred product has wrong cardinality");
  std::vector<ElementId> meet(static_cast<std::size_t>(n) * n);
  std::vector<ElementId> join(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      auto [pl, pr] = carrier[p];
      auto [ql, qr] = carrier[q];
      meet[static_cast<std::size_t>(p) * n + q] =
          index.at({out.by_L.algebra.meet_of(pl, ql),
                    out.by_R.algebra.meet_of(pr, qr)});
      join[static_cast<std::size_t>(p) * n + q] =
          index.at({out.by_L.algebra.join_of(pl, ql),
                    out.by_R.algebra.join_of(pr, qr)});
    }
  out.fibred_product = make_algebra(OpTable(n, meet), OpTable(n, join));

  auto iso = find_isomorphism(s, out.fibred_product);
  internal_check(iso.has_value(),
                 "fibred product is not isomorphic to the original");
  out.iso = *iso;
  return out;
}

std::string hasse_dot(const SkewLatticeAlgebra& s) {
  require_validated(s, "hasse_dot");
  std::ostringstream dot;
  dot << "// skewlat hasse v1\n";
  dot << "digraph hasse {\n";
  for (ElementId x = 0; x < s.size; ++x)
    dot << "  e" << x << " [label=\"" << s.display(x) << "\"];\n";
  BinaryRelation covers = element_cover(s);
  for (ElementId y = 0; y < s.size; ++y)
    for (ElementId x : covers.row(y).to_vector())
      dot << "  e" << y << " -> e" << x << " [style=solid];\n";
  // One dashed path through each multi-element D-class, in id order.
  Partition d = d_classes(s);
  for (const ElemSet& block : d.blocks) {
    const std::vector<ElementId> members = block.to_vector();
    for (std::size_t i = 1; i < members.size(); ++i)
      dot << "  e" << members[i - 1] << " -> e" << members[i]
          << " [dir=none, style=dashed];\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace skewlat
