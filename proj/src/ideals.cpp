#include "skewlat/ideals.hpp"

#include <algorithm>

namespace skewlat {

std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::ideal: return "ideal";
    case IdealKind::filter: return "filter";
    case IdealKind::skew_ideal: return "skew_ideal";
    case IdealKind::skew_filter: return "skew_filter";
  }
  return "?";
}

int IdealLattice::find(ElemSet elements) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].elements == elements) return static_cast<int>(i);
  return -1;
}

namespace {

bool join_closed(const SkewLatticeAlgebra& s, ElemSet x) {
  for (ElementId a : x.to_vector())
    for (ElementId b : x.to_vector())
      if (!x.contains(s.join_of(a, b))) return false;
  return true;
}

bool meet_closed(const SkewLatticeAlgebra& s, ElemSet x) {
  for (ElementId a : x.to_vector())
    for (ElementId b : x.to_vector())
      if (!x.contains(s.meet_of(a, b))) return false;
  return true;
}

bool down_closed(const BinaryRelation& below, ElemSet x) {
  for (ElementId y : x.to_vector())
    for (ElementId z = 0; z < below.size(); ++z)
      if (below.contains(z, y) && !x.contains(z)) return false;
  return true;
}

ElemSet close(const SkewLatticeAlgebra& s, ElemSet seed,
              const BinaryRelation& below, bool use_join) {
  ElemSet acc = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    ElemSet next = acc;
    for (ElementId a : acc.to_vector()) {
      for (ElementId b : acc.to_vector())
        next.add(use_join ? s.join_of(a, b) : s.meet_of(a, b));
      for (ElementId z = 0; z < s.size; ++z)
        if (below.contains(z, a)) next.add(z);
    }
    if (next != acc) {
      acc = next;
      grew = true;
    }
  }
  return acc;
}

}  // namespace

bool is_ideal(const SkewLatticeAlgebra& s, ElemSet x) {
  if (x.empty()) throw std::invalid_argument("ideal test on empty subset");
  BinaryRelation pre = natural_preorder(s);
  const bool closed = join_closed(s, x);
  const bool crit_down = down_closed(pre, x);

  // Alternative criteria; all agree on join-closed subsets.
  bool crit_pair = true, crit_sandwich = true;
  for (ElementId y : x.to_vector())
    for (ElementId a = 0; a < s.size; ++a) {
      crit_pair = crit_pair && x.contains(s.meet_of(y, a)) &&
                  x.contains(s.meet_of(a, y));
      crit_sandwich = crit_sandwich && x.contains(s.meet3(a, y, a));
    }
  if (closed)
    internal_check(crit_down == crit_pair && crit_pair == crit_sandwich,
                   "ideal criteria disagree on a join-closed subset");

  // a,b in I iff a v b v a in I, for all pairs; holds exactly for ideals.
  bool biconditional = true;
  for (ElementId a = 0; a < s.size && biconditional; ++a)
    for (ElementId b = 0; b < s.size && biconditional; ++b)
      biconditional = (x.contains(a) && x.contains(b)) ==
                      x.contains(s.join3(a, b, a));
  const bool result = closed && crit_down;
  internal_check(biconditional == result,
                 "biconditional ideal characterization disagrees");
  return result;
}

bool is_filter(const SkewLatticeAlgebra& s, ElemSet x) {
  return is_ideal(dualize(s), x);
}

bool is_skew_ideal(const SkewLatticeAlgebra& s, ElemSet x) {
  if (x.empty()) throw std::invalid_argument("skew ideal test on empty subset");
  BinaryRelation leq = natural_leq(s);
  const bool result = join_closed(s, x) && down_closed(leq, x);

  // y ^ a ^ y stays inside, together with pair joins.
  bool sandwich = true;
  for (ElementId y : x.to_vector())
    for (ElementId a = 0; a < s.size; ++a)
      sandwich = sandwich && x.contains(s.meet3(y, a, y));
  internal_check((join_closed(s, x) && sandwich) == result,
                 "skew ideal sandwich criterion disagrees");

  if (result)
    internal_check(meet_closed(s, x), "skew ideal is not a subalgebra");
  return result;
}

bool is_skew_filter(const SkewLatticeAlgebra& s, ElemSet x) {
  return is_skew_ideal(dualize(s), x);
}

IdealSet generated_ideal(const SkewLatticeAlgebra& s, ElemSet x) {
  if (x.empty()) throw std::invalid_argument("generators must be nonempty");
  ElemSet closure = close(s, x, natural_preorder(s), /*use_join=*/true);
  internal_check(is_ideal(s, closure), "generated set is not an ideal");
  // Cross-check through the maximal lattice image: the generated ideal is
  // the union of the D-classes of the lattice ideal generated by the
  // generators' classes. (The union of the principal ideals alone is not
  // join-closed once generators sit in incomparable classes.)
  ClassOrder co = class_order(s);
  QuotientAlgebra q = quotient(s, co.classes);
  ElemSet q_seed;
  for (ElementId g : x.to_vector()) q_seed.add(co.classes.block_of[g]);
  ElemSet q_ideal =
      close(q.algebra, q_seed, natural_preorder(q.algebra), /*use_join=*/true);
  ElemSet lifted;
  for (int b : q_ideal.to_vector()) lifted = lifted | co.classes.blocks[b];
  internal_check(lifted == closure,
                 "generated ideal differs from its lattice-image transfer");
  return IdealSet{IdealKind::ideal, closure, x};
}

IdealSet generated_filter(const SkewLatticeAlgebra& s, ElemSet x) {
  IdealSet dual = generated_ideal(dualize(s), x);
  return IdealSet{IdealKind::filter, dual.elements, x};
}

IdealSet generated_skew_ideal(const SkewLatticeAlgebra& s, ElemSet x) {
  if (x.empty()) throw std::invalid_argument("generators must be nonempty");
  ElemSet closure = close(s, x, natural_leq(s), /*use_join=*/true);
  internal_check(is_skew_ideal(s, closure),
                 "generated set is not a skew ideal");
  // The finite-join description needs meet to distribute over join on both
  // sides; the weaker sandwich identity admits counterexamples (the
  // five-element one-sided algebras).
  if (is_fully_meet_distributive(s))
    internal_check(finite_join_closure_of_downset(s, x) == closure,
                   "finite-join formula disagrees with generation");
  return IdealSet{IdealKind::skew_ideal, closure, x};
}

IdealSet generated_skew_filter(const SkewLatticeAlgebra& s, ElemSet x) {
  IdealSet dual = generated_skew_ideal(dualize(s), x);
  return IdealSet{IdealKind::skew_filter, dual.elements, x};
}

IdealSet principal_ideal(const SkewLatticeAlgebra& s, ElementId x) {
  if (x < 0 || x >= s.size) throw std::invalid_argument("element out of range");
  ElemSet sandwich;
  for (ElementId a = 0; a < s.size; ++a)
    for (ElementId b = 0; b < s.size; ++b)
      sandwich.add(s.meet_of(s.meet_of(a, x), b));
  ElemSet downs;
  BinaryRelation pre = natural_preorder(s);
  for (ElementId y = 0; y < s.size; ++y)
    if (pre.contains(y, x)) downs.add(y);
  internal_check(sandwich == downs, "S^x^S differs from the preorder downset");

  ElemSet closure = close(s, ElemSet::single(x), pre, /*use_join=*/true);
  internal_check(closure == sandwich, "S^x^S differs from generation");
  return IdealSet{IdealKind::ideal, sandwich, ElemSet::single(x)};
}

IdealSet principal_filter(const SkewLatticeAlgebra& s, ElementId x) {
  IdealSet dual = principal_ideal(dualize(s), x);
  return IdealSet{IdealKind::filter, dual.elements, ElemSet::single(x)};
}

IdealSet principal_skew_ideal(const SkewLatticeAlgebra& s, ElementId x) {
  if (x < 0 || x >= s.size) throw std::invalid_argument("element out of range");
  ElemSet sandwich;
  for (ElementId a = 0; a < s.size; ++a) sandwich.add(s.meet3(x, a, x));
  ElemSet downs;
  BinaryRelation leq = natural_leq(s);
  for (ElementId y = 0; y < s.size; ++y)
    if (leq.contains(y, x)) downs.add(y);
  internal_check(sandwich == downs, "x^S^x differs from the <= downset");

  ElemSet closure = close(s, ElemSet::single(x), leq, /*use_join=*/true);
  internal_check(closure == sandwich, "x^S^x differs from generation");
  return IdealSet{IdealKind::skew_ideal, sandwich, ElemSet::single(x)};
}

IdealSet principal_skew_filter(const SkewLatticeAlgebra& s, ElementId x) {
  IdealSet dual = principal_skew_ideal(dualize(s), x);
  return IdealSet{IdealKind::skew_filter, dual.elements, ElemSet::single(x)};
}

namespace {

// All nonempty down-sets of a partial order that satisfy a predicate.
// Elements are processed along a linear extension; including x requires its
// strict down-set to be present already.
template <typename Pred>
std::vector<ElemSet> downsets_satisfying(const SkewLatticeAlgebra& s,
                                         const BinaryRelation& below,
                                         Pred&& keep) {
  const int n = s.size;
  if (n > 24)
    throw std::invalid_argument("down-set enumeration capped at 24 elements");
  std::vector<ElemSet> strict_down(n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (y != x && below.contains(y, x)) strict_down[x].add(y);

  // Linear extension: fewer elements below first.
  std::vector<ElementId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return strict_down[a].count() < strict_down[b].count();
  });

  std::vector<ElemSet> out;
  ElemSet current;
  auto dfs = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      if (!current.empty() && keep(current)) out.push_back(current);
      return;
    }
    const ElementId x = order[idx];
    self(self, idx + 1);
    if (strict_down[x].subset_of(current)) {
      current.add(x);
      self(self, idx + 1);
      current.remove(x);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

IdealLattice build_family(const SkewLatticeAlgebra& s, IdealKind kind,
                          std::vector<ElemSet> sets) {
  IdealLattice fam;
  fam.kind = kind;
  for (ElemSet e : sets) fam.members.push_back(IdealSet{kind, e, {}});
  const int m = static_cast<int>(fam.members.size());
  fam.inclusion = BinaryRelation(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (fam.members[i].elements.subset_of(fam.members[j].elements))
        fam.inclusion.add(i, j);

  const bool skew =
      kind == IdealKind::skew_ideal || kind == IdealKind::skew_filter;
  fam.meet.assign(m, std::vector<int>(m, -1));
  fam.join.assign(m, std::vector<int>(m, -1));
  fam.lattice = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ElemSet inter = fam.members[i].elements & fam.members[j].elements;
      if (!inter.empty()) {
        // A nonempty intersection inherits both closure properties.
        const int at = fam.find(inter);
        internal_check(at >= 0, "intersection escapes the family");
        fam.meet[i][j] = at;
      } else {
        fam.lattice = false;
      }
      ElemSet uni = fam.members[i].elements | fam.members[j].elements;
      ElemSet joined;
      switch (kind) {
        case IdealKind::ideal: joined = generated_ideal(s, uni).elements; break;
        case IdealKind::filter:
          joined = generated_filter(s, uni).elements;
          break;
        case IdealKind::skew_ideal:
          joined = generated_skew_ideal(s, uni).elements;
          break;
        case IdealKind::skew_filter:
          joined = generated_skew_filter(s, uni).elements;
          break;
      }
      const int at = fam.find(joined);
      internal_check(at >= 0, "join escapes the family");
      fam.join[i][j] = at;
    }
  if (!skew)
    internal_check(fam.lattice, "ideal family must be closed under meets");
  return fam;
}

}  // namespace

IdealLattice enumerate_ideals(const SkewLatticeAlgebra& s) {
  // Transfer through the maximal lattice image: ideals are exactly the
  // unions of D-classes over the lattice ideals of S/D.
  ClassOrder co = class_order(s);
  QuotientAlgebra q = quotient(s, co.classes);
  std::vector<ElemSet> q_ideals = downsets_satisfying(
      q.algebra, natural_leq(q.algebra),
      [&](ElemSet x) { return join_closed(q.algebra, x); });
  std::vector<ElemSet> lifted;
  for (ElemSet qi : q_ideals) {
    ElemSet u;
    for (int b : qi.to_vector()) u = u | co.classes.blocks[b];
    internal_check(is_ideal(s, u), "lifted class union is not an ideal");
    lifted.push_back(u);
  }
  std::sort(lifted.begin(), lifted.end());
  IdealLattice fam = build_family(s, IdealKind::ideal, lifted);
  internal_check(fam.members.size() == q_ideals.size(),
                 "ideal count differs from the lattice image count");
  return fam;
}

IdealLattice enumerate_filters(const SkewLatticeAlgebra& s) {
  IdealLattice dual = enumerate_ideals(dualize(s));
  std::vector<ElemSet> sets;
  for (const IdealSet& m : dual.members) sets.push_back(m.elements);
  return build_family(s, IdealKind::filter, sets);
}

IdealLattice enumerate_skew_ideals(const SkewLatticeAlgebra& s) {
  std::vector<ElemSet> sets = downsets_satisfying(
      s, natural_leq(s), [&](ElemSet x) { return join_closed(s, x); });
  return build_family(s, IdealKind::skew_ideal, sets);
}

IdealLattice enumerate_skew_filters(const SkewLatticeAlgebra& s) {
  IdealLattice dual = enumerate_skew_ideals(dualize(s));
  std::vector<ElemSet> sets;
  for (const IdealSet& m : dual.members) sets.push_back(m.elements);
  return build_family(s, IdealKind::skew_filter, sets);
}

IdealSet recursive_principal_skew_ideal(const SkewLatticeAlgebra& s,
                                        ElementId x) {
  if (x < 0 || x >= s.size) throw std::invalid_argument("element out of range");
  Partition d = d_classes(s);
  BinaryRelation covers = element_cover(s);
  ElemSet total = ElemSet::single(x);
  ElemSet stage = ElemSet::single(x);
  while (!stage.empty()) {
    ElemSet next;
    for (ElementId z : stage.to_vector())
      for (ElementId y = 0; y < s.size; ++y) {
        if (!covers.contains(y, z)) continue;  // y covered by z
        for (ElementId w : d.blocks[d.block_of[y]].to_vector())
          next.add(s.meet3(z, w, z));
      }
    stage = next - total;
    total = total | next;
  }
  internal_check(total == principal_skew_ideal(s, x).elements,
                 "cover recursion differs from x^S^x");
  return IdealSet{IdealKind::skew_ideal, total, ElemSet::single(x)};
}

bool is_meet_distributive(const SkewLatticeAlgebra& s) {
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      for (ElementId z = 0; z < s.size; ++z)
        if (s.meet3(x, s.join_of(y, z), x) !=
            s.join_of(s.meet3(x, y, x), s.meet3(x, z, x)))
          return false;
  return true;
}

bool is_fully_meet_distributive(const SkewLatticeAlgebra& s) {
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y)
      for (ElementId z = 0; z < s.size; ++z) {
        if (s.meet_of(x, s.join_of(y, z)) !=
            s.join_of(s.meet_of(x, y), s.meet_of(x, z)))
          return false;
        if (s.meet_of(s.join_of(y, z), x) !=
            s.join_of(s.meet_of(y, x), s.meet_of(z, x)))
          return false;
      }
  return true;
}

ElemSet finite_join_closure_of_downset(const SkewLatticeAlgebra& s,
                                       ElemSet x) {
  BinaryRelation leq = natural_leq(s);
  ElemSet down;
  for (ElementId g : x.to_vector())
    for (ElementId y = 0; y < s.size; ++y)
      if (leq.contains(y, g)) down.add(y);
  // Finite joins of elements of the down-closure, no further down steps.
  ElemSet acc = down;
  bool grew = true;
  while (grew) {
    grew = false;
    ElemSet next = acc;
    for (ElementId a : acc.to_vector())
      for (ElementId b : acc.to_vector()) next.add(s.join_of(a, b));
    if (next != acc) {
      acc = next;
      grew = true;
    }
  }
  return acc;
}

}  // namespace skewlat
