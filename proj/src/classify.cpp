#include "skewlat/classify.hpp"

#include <algorithm>

namespace skewlat {

namespace {

template <typename Pred>
PropertyValue sweep(int n, int arity, Pred&& pred) {
  PropertyValue out;
  std::vector<ElementId> t(arity, 0);
  auto scan = [&](auto&& self, int depth) -> bool {
    if (depth == arity) return pred(t);
    for (t[depth] = 0; t[depth] < n; ++t[depth])
      if (!self(self, depth + 1)) return false;
    return true;
  };
  out.holds = scan(scan, 0);
  if (!out.holds) out.witness = t;
  return out;
}

}  // namespace

PropertyReport properties(const SkewLatticeAlgebra& s) {
  if (!s.validated)
    throw std::invalid_argument("properties requires a validated algebra");
  const int n = s.size;
  PropertyReport report;
  using T = const std::vector<ElementId>&;

  report["symmetric"] = sweep(n, 2, [&](T t) {
    return (s.meet_of(t[0], t[1]) == s.meet_of(t[1], t[0])) ==
           (s.join_of(t[0], t[1]) == s.join_of(t[1], t[0]));
  });
  report["normal"] = sweep(n, 4, [&](T t) {
    return s.meet_of(s.meet3(t[0], t[1], t[2]), t[3]) ==
           s.meet_of(s.meet3(t[0], t[2], t[1]), t[3]);
  });
  report["conormal"] = sweep(n, 4, [&](T t) {
    return s.join_of(s.join3(t[0], t[1], t[2]), t[3]) ==
           s.join_of(s.join3(t[0], t[2], t[1]), t[3]);
  });
  PropertyValue binormal;
  binormal.holds = report["normal"].holds && report["conormal"].holds;
  if (!binormal.holds)
    binormal.witness = report["normal"].holds ? report["conormal"].witness
                                              : report["normal"].witness;
  report["binormal"] = binormal;

  PropertyValue meet_dist = sweep(n, 3, [&](T t) {
    return s.meet3(t[0], s.join_of(t[1], t[2]), t[0]) ==
           s.join_of(s.meet3(t[0], t[1], t[0]), s.meet3(t[0], t[2], t[0]));
  });
  PropertyValue join_dist = sweep(n, 3, [&](T t) {
    return s.join3(t[0], s.meet_of(t[1], t[2]), t[0]) ==
           s.meet_of(s.join3(t[0], t[1], t[0]), s.join3(t[0], t[2], t[0]));
  });
  report["meet_distributive"] = meet_dist;
  PropertyValue distributive;
  distributive.holds = meet_dist.holds && join_dist.holds;
  if (!distributive.holds)
    distributive.witness =
        meet_dist.holds ? join_dist.witness : meet_dist.witness;
  report["distributive"] = distributive;

  // Quasi-distributivity is distributivity of the maximal lattice image.
  QuotientAlgebra q = quotient(s, d_classes(s));
  const SkewLatticeAlgebra& qa = q.algebra;
  PropertyValue quasi = sweep(qa.size, 3, [&](T t) {
    return qa.meet_of(t[0], qa.join_of(t[1], t[2])) ==
           qa.join_of(qa.meet_of(t[0], t[1]), qa.meet_of(t[0], t[2]));
  });
  report["quasi_distributive"] = quasi;

  report["rectangular"] = sweep(n, 2, [&](T t) {
    return s.meet3(t[0], t[1], t[0]) == t[0];
  });

  ClassOrder co = class_order(s);
  internal_check(report["rectangular"].holds ==
                     (co.classes.block_count() == 1),
                 "rectangular identity must mean a single D-class");
  PropertyValue chain_prop;
  chain_prop.holds = true;
  for (int a = 0; a < co.classes.block_count() && chain_prop.holds; ++a)
    for (int b = 0; b < co.classes.block_count(); ++b)
      if (a != b && !co.leq.contains(a, b) && !co.leq.contains(b, a)) {
        chain_prop.holds = false;
        chain_prop.witness = {co.classes.blocks[a].least(),
                              co.classes.blocks[b].least()};
        break;
      }
  report["skew_chain"] = chain_prop;

  const Handedness h = handedness(s);
  PropertyValue right;
  right.holds = h == Handedness::right || h == Handedness::both;
  if (!right.holds)
    right.witness = sweep(n, 2, [&](T t) {
      return s.meet3(t[0], t[1], t[0]) == s.meet_of(t[1], t[0]);
    }).witness;
  report["right_handed"] = right;
  PropertyValue left;
  left.holds = h == Handedness::left || h == Handedness::both;
  if (!left.holds)
    left.witness = sweep(n, 2, [&](T t) {
      return s.meet3(t[0], t[1], t[0]) == s.meet_of(t[0], t[1]);
    }).witness;
  report["left_handed"] = left;
  return report;
}

ElemSet center(const SkewLatticeAlgebra& s) {
  ClassOrder co = class_order(s);
  ElemSet z;
  for (const ElemSet& block : co.classes.blocks)
    if (block.count() == 1) z.add(block.least());
  if (z.empty()) return z;

  for (ElementId a : z.to_vector())
    for (ElementId b : z.to_vector())
      internal_check(z.contains(s.meet_of(a, b)) && z.contains(s.join_of(a, b)),
                     "center is not closed under the operations");
  SkewLatticeAlgebra zc = restrict_to(s, z);
  PropertyReport zp = properties(zc);
  internal_check(zp.at("normal").holds, "center is not normal");

  PropertyReport sp = properties(s);
  if (sp.at("normal").holds) {
    // The class image of the center is a lattice ideal of S/D.
    QuotientAlgebra q = quotient(s, co.classes);
    ElemSet image;
    for (ElementId a : z.to_vector()) image.add(co.classes.block_of[a]);
    internal_check(is_ideal(q.algebra, image),
                   "center image is not an ideal of the lattice image");
  }
  return z;
}

std::vector<ElemSet> lattice_sections(const SkewLatticeAlgebra& s) {
  ClassOrder co = class_order(s);
  long long transversals = 1;
  for (const ElemSet& block : co.classes.blocks) {
    transversals *= block.count();
    if (transversals > 1000000)
      throw std::invalid_argument("too many transversals to enumerate");
  }
  const int m = co.classes.block_count();
  std::vector<ElemSet> out;
  std::vector<ElementId> choice(m);
  auto dfs = [&](auto&& self, int idx) -> void {
    if (idx == m) {
      ElemSet candidate;
      for (ElementId x : choice) candidate.add(x);
      for (ElementId a : candidate.to_vector())
        for (ElementId b : candidate.to_vector())
          if (!candidate.contains(s.meet_of(a, b)) ||
              !candidate.contains(s.join_of(a, b)))
            return;
      out.push_back(candidate);
      return;
    }
    for (ElementId x : co.classes.blocks[idx].to_vector()) {
      choice[idx] = x;
      self(self, idx + 1);
    }
  };
  dfs(dfs, 0);

  QuotientAlgebra q = quotient(s, co.classes);
  for (ElemSet section : out) {
    SkewLatticeAlgebra sub = restrict_to(s, section);
    internal_check(find_isomorphism(sub, q.algebra).has_value(),
                   "lattice section is not isomorphic to S/D");
  }
  return out;
}

std::optional<ElementId> detect_zero(const SkewLatticeAlgebra& s) {
  ClassOrder co = class_order(s);
  int bottom = -1;
  for (int b = 0; b < co.classes.block_count(); ++b) {
    bool least = true;
    for (int c = 0; c < co.classes.block_count(); ++c)
      least = least && co.leq.contains(b, c);
    if (least) bottom = b;
  }
  internal_check(bottom != -1, "finite lattice image has no bottom class");
  if (co.classes.blocks[bottom].count() != 1) return std::nullopt;
  const ElementId zero = co.classes.blocks[bottom].least();
  for (ElementId x = 0; x < s.size; ++x)
    internal_check(s.meet_of(zero, x) == zero && s.meet_of(x, zero) == zero,
                   "bottom singleton does not absorb under meet");
  return zero;
}

bool subalgebra_is_commutative(const SkewLatticeAlgebra& s, ElemSet subset) {
  for (ElementId a : subset.to_vector())
    for (ElementId b : subset.to_vector())
      if (s.meet_of(a, b) != s.meet_of(b, a) ||
          s.join_of(a, b) != s.join_of(b, a))
        return false;
  return true;
}

bool sub_lattice_is_distributive(const SkewLatticeAlgebra& s, ElemSet subset) {
  if (!subalgebra_is_commutative(s, subset)) return false;
  for (ElementId a : subset.to_vector())
    for (ElementId b : subset.to_vector())
      for (ElementId c : subset.to_vector())
        if (s.meet_of(a, s.join_of(b, c)) !=
            s.join_of(s.meet_of(a, b), s.meet_of(a, c)))
          return false;
  return true;
}

bool sub_lattice_is_boolean(const SkewLatticeAlgebra& s, ElemSet subset,
                            ElementId zero, ElementId top) {
  if (!sub_lattice_is_distributive(s, subset)) return false;
  if (!subset.contains(zero) || !subset.contains(top)) return false;
  for (ElementId a : subset.to_vector()) {
    bool complemented = false;
    for (ElementId b : subset.to_vector())
      if (s.meet_of(a, b) == zero && s.join_of(a, b) == top)
        complemented = true;
    if (!complemented) return false;
  }
  return true;
}

SkewBooleanOutcome skew_boolean_structure(const SkewLatticeAlgebra& s) {
  SkewBooleanOutcome out;
  std::optional<ElementId> zero = detect_zero(s);
  out.has_zero = zero.has_value();
  PropertyReport props = properties(s);
  out.preconditions_ok = props.at("distributive").holds &&
                         props.at("normal").holds &&
                         props.at("symmetric").holds;

  bool solved = out.has_zero && out.preconditions_ok;
  std::vector<ElementId> diff(static_cast<std::size_t>(s.size) * s.size);
  if (solved) {
    for (ElementId x = 0; x < s.size && solved; ++x)
      for (ElementId y = 0; y < s.size && solved; ++y) {
        const ElementId mid = s.meet3(x, y, x);
        int found = 0;
        ElementId sol = -1;
        for (ElementId z = 0; z < s.size; ++z)
          if (s.join_of(mid, z) == x && s.meet_of(mid, z) == *zero) {
            ++found;
            sol = z;
          }
        if (found == 1) {
          diff[static_cast<std::size_t>(x) * s.size + y] = sol;
        } else {
          solved = false;
          out.failing_pair = {x, y};
          out.solutions_at_failure = found;
        }
      }
  }
  if (solved)
    out.structure = SkewBooleanStructure{*zero, OpTable(s.size, diff)};

  // Characterization by principal skew ideals: symmetric with zero and every
  // x-down-star a Boolean lattice.
  bool characterization = out.has_zero && props.at("symmetric").holds;
  if (characterization)
    for (ElementId x = 0; x < s.size && characterization; ++x)
      characterization = sub_lattice_is_boolean(
          s, principal_skew_ideal(s, x).elements, *zero, x);
  internal_check(characterization == out.structure.has_value(),
                 "difference search disagrees with the Boolean characterization");
  return out;
}

std::optional<ScheinFactorization> schein_factorization(
    const SkewLatticeAlgebra& s) {
  PropertyReport props = properties(s);
  if (!props.at("binormal").holds)
    throw std::invalid_argument("schein_factorization requires binormality");
  ClassOrder co = class_order(s);
  QuotientAlgebra q = quotient(s, co.classes);
  for (int b = 0; b < co.classes.block_count(); ++b) {
    SkewLatticeAlgebra rect = restrict_to(s, co.classes.blocks[b]);
    SkewLatticeAlgebra product = direct_product(q.algebra, rect);
    if (auto iso = find_isomorphism(s, product))
      return ScheinFactorization{q.algebra, rect, *iso, b};
  }
  return std::nullopt;
}

bool normality_cross_checks(const SkewLatticeAlgebra& s) {
  PropertyReport props = properties(s);
  const bool by_identity = props.at("normal").holds;

  bool by_down_stars = true;
  for (ElementId x = 0; x < s.size && by_down_stars; ++x)
    by_down_stars =
        subalgebra_is_commutative(s, principal_skew_ideal(s, x).elements);

  bool by_cosets = true;
  ClassOrder co = class_order(s);
  for (int a = 0; a < co.classes.block_count() && by_cosets; ++a)
    for (int b = 0; b < co.classes.block_count() && by_cosets; ++b) {
      if (a == b || !co.leq.contains(b, a)) continue;
      CosetDecomposition dec =
          coset_partition(s, co, make_class_pair(co, a, b));
      by_cosets = dec.in_lower.size() == 1;
    }

  internal_check(by_identity == by_down_stars,
                 "normality identity disagrees with down-star commutativity");
  internal_check(by_identity == by_cosets,
                 "normality identity disagrees with the single-coset test");

  if (by_identity) {
    bool stars_distributive = true;
    for (ElementId x = 0; x < s.size && stars_distributive; ++x)
      stars_distributive =
          sub_lattice_is_distributive(s, principal_skew_ideal(s, x).elements);
    internal_check(props.at("quasi_distributive").holds == stars_distributive,
                   "quasi-distributivity differs from down-star distributivity");
    internal_check(props.at("distributive").holds ==
                       props.at("quasi_distributive").holds,
                   "distributivity must match quasi-distributivity when normal");
  }
  return by_identity;
}

}  // namespace skewlat
