#include "skewlat/cosets.hpp"

#include <algorithm>
#include <map>

namespace skewlat {

ClassPair make_class_pair(const ClassOrder& co, int upper, int lower) {
  const int m = co.classes.block_count();
  if (upper < 0 || upper >= m || lower < 0 || lower >= m)
    throw std::invalid_argument("class index out of range");
  if (upper == lower || !co.leq.contains(lower, upper))
    throw std::invalid_argument("classes are not strictly comparable");
  return ClassPair{upper, lower};
}

Coset coset(const SkewLatticeAlgebra& s, const ClassOrder& co, ClassPair pair,
            ElementId anchor, CosetSide side) {
  const ElemSet upper = co.classes.blocks[pair.upper];
  const ElemSet lower = co.classes.blocks[pair.lower];
  Coset out{pair, side, {}, anchor};
  if (side == CosetSide::in_lower) {
    if (!lower.contains(anchor))
      throw std::invalid_argument("in_lower coset needs an anchor in the lower class");
    for (ElementId a : upper.to_vector()) out.elements.add(s.meet3(a, anchor, a));
    internal_check(out.elements.subset_of(lower), "A^b^A escapes the lower class");
  } else {
    if (!upper.contains(anchor))
      throw std::invalid_argument("in_upper coset needs an anchor in the upper class");
    for (ElementId b : lower.to_vector()) out.elements.add(s.join3(b, anchor, b));
    internal_check(out.elements.subset_of(upper), "BvavB escapes the upper class");
  }
  return out;
}

ElemSet image_set(const SkewLatticeAlgebra& s, const ClassOrder& co,
                  ElementId x, int target_class) {
  const int cx = co.classes.block_of[x];
  if (cx == target_class)
    throw std::invalid_argument("image set needs a distinct comparable class");
  BinaryRelation leq = natural_leq(s);
  ElemSet product, order_form;
  if (co.leq.contains(target_class, cx)) {
    for (ElementId b : co.classes.blocks[target_class].to_vector()) {
      product.add(s.meet3(x, b, x));
      if (leq.contains(b, x) && b != x) order_form.add(b);
    }
  } else if (co.leq.contains(cx, target_class)) {
    for (ElementId a : co.classes.blocks[target_class].to_vector()) {
      product.add(s.join3(x, a, x));
      if (leq.contains(x, a) && a != x) order_form.add(a);
    }
  } else {
    throw std::invalid_argument("image set needs a comparable class");
  }
  internal_check(product == order_form,
                 "image set product form differs from its order form");
  return product;
}

CosetDecomposition coset_partition(const SkewLatticeAlgebra& s,
                                   const ClassOrder& co, ClassPair pair) {
  const ElemSet upper = co.classes.blocks[pair.upper];
  const ElemSet lower = co.classes.blocks[pair.lower];
  CosetDecomposition out;

  auto collect = [&](ElemSet within, CosetSide side) {
    std::vector<Coset> found;
    ElemSet seen;
    for (ElementId anchor : within.to_vector()) {
      Coset c = coset(s, co, pair, anchor, side);
      bool fresh = true;
      for (const Coset& old : found) {
        internal_check(old.elements == c.elements ||
                           (old.elements & c.elements).empty(),
                       "two cosets neither equal nor disjoint");
        if (old.elements == c.elements) fresh = false;
      }
      if (fresh) {
        found.push_back(c);
        seen = seen | c.elements;
      }
    }
    internal_check(seen == within, "cosets do not cover their class");
    return found;
  };
  out.in_lower = collect(lower, CosetSide::in_lower);
  out.in_upper = collect(upper, CosetSide::in_upper);

  // Equal coset sizes within a direction, and |coset| * count = |class|.
  for (const Coset& c : out.in_lower)
    internal_check(c.elements.count() == out.in_lower.front().elements.count(),
                   "lower cosets differ in size");
  for (const Coset& c : out.in_upper)
    internal_check(c.elements.count() == out.in_upper.front().elements.count(),
                   "upper cosets differ in size");
  internal_check(static_cast<int>(out.in_lower.size()) *
                         out.in_lower.front().elements.count() ==
                     lower.count(),
                 "lower cosets do not partition by size");
  internal_check(static_cast<int>(out.in_upper.size()) *
                         out.in_upper.front().elements.count() ==
                     upper.count(),
                 "upper cosets do not partition by size");

  // Image sets are transversals: one element in each coset of the opposite
  // class's partition.
  for (ElementId a : upper.to_vector()) {
    ElemSet img = image_set(s, co, a, pair.lower);
    for (const Coset& c : out.in_lower)
      internal_check((img & c.elements).count() == 1,
                     "image set is not a transversal of the lower cosets");
  }
  for (ElementId b : lower.to_vector()) {
    ElemSet img = image_set(s, co, b, pair.upper);
    for (const Coset& c : out.in_upper)
      internal_check((img & c.elements).count() == 1,
                     "image set is not a transversal of the upper cosets");
  }
  return out;
}

CosetBijection coset_bijection(const SkewLatticeAlgebra& s,
                               const ClassOrder& co, const Coset& upper_coset,
                               const Coset& lower_coset) {
  if (upper_coset.side != CosetSide::in_upper ||
      lower_coset.side != CosetSide::in_lower ||
      upper_coset.classes.upper != lower_coset.classes.upper ||
      upper_coset.classes.lower != lower_coset.classes.lower ||
      upper_coset.classes.upper >= co.classes.block_count())
    throw std::invalid_argument(
        "coset bijection needs opposite cosets of one class pair");
  BinaryRelation leq = natural_leq(s);
  CosetBijection out{upper_coset, lower_coset, {}};
  for (ElementId x : upper_coset.elements.to_vector()) {
    ElementId match = -1;
    for (ElementId y : lower_coset.elements.to_vector())
      if (leq.contains(y, x)) {
        internal_check(match == -1, "coset bijection image is not unique");
        match = y;
      }
    internal_check(match != -1, "coset bijection is not total");
    out.mapping.emplace_back(x, match);
  }
  ElemSet hit;
  for (auto [x, y] : out.mapping) hit.add(y);
  internal_check(hit == lower_coset.elements, "coset bijection is not onto");
  return out;
}

bool reconstruction_check(const SkewLatticeAlgebra& s, const ClassOrder& co,
                          ClassPair pair) {
  CosetDecomposition dec = coset_partition(s, co, pair);
  BinaryRelation leq = natural_leq(s);

  auto lower_coset_of = [&](ElementId y) -> const Coset& {
    for (const Coset& c : dec.in_lower)
      if (c.elements.contains(y)) return c;
    internal_error("element outside every lower coset");
  };
  auto upper_coset_of = [&](ElementId x) -> const Coset& {
    for (const Coset& c : dec.in_upper)
      if (c.elements.contains(x)) return c;
    internal_error("element outside every upper coset");
  };

  for (ElementId x : co.classes.blocks[pair.upper].to_vector())
    for (ElementId y : co.classes.blocks[pair.lower].to_vector()) {
      // phi maps the upper coset through x onto the lower coset through y.
      CosetBijection phi =
          coset_bijection(s, co, upper_coset_of(x), lower_coset_of(y));
      ElementId x_down = -1, y_up = -1;
      for (auto [u, v] : phi.mapping) {
        if (u == x) x_down = v;
        if (v == y) y_up = u;
      }
      internal_check(x_down != -1 && y_up != -1,
                     "bijection misses the reconstruction anchors");
      internal_check(x_down == s.meet3(x, y, x), "bijection image is not x^y^x");
      internal_check(y_up == s.join3(y, x, y), "bijection preimage is not yvxvy");
      internal_check(leq.contains(x_down, x) && leq.contains(y, y_up),
                     "bijection pairs are not order-related");
      // Mixed products from in-class rectangles plus the bijection images.
      if (s.meet_of(x, y) != s.meet_of(x_down, y)) return false;
      if (s.meet_of(y, x) != s.meet_of(y, x_down)) return false;
      if (s.join_of(x, y) != s.join_of(x, y_up)) return false;
      if (s.join_of(y, x) != s.join_of(y_up, x)) return false;
    }
  return true;
}

IndexValue coset_index(const SkewLatticeAlgebra& s, const ClassOrder& co,
                       ClassPair pair, IndexDirection direction) {
  CosetDecomposition dec = coset_partition(s, co, pair);
  IndexValue out{pair, direction, 0};
  const ElemSet reps = direction == IndexDirection::upper_in_lower
                           ? co.classes.blocks[pair.upper]
                           : co.classes.blocks[pair.lower];
  const int target = direction == IndexDirection::upper_in_lower
                         ? pair.lower
                         : pair.upper;
  int value = -1;
  for (ElementId r : reps.to_vector()) {
    const int size = image_set(s, co, r, target).count();
    internal_check(value == -1 || value == size,
                   "image set size depends on the representative");
    value = size;
  }
  const int coset_count = direction == IndexDirection::upper_in_lower
                              ? static_cast<int>(dec.in_lower.size())
                              : static_cast<int>(dec.in_upper.size());
  internal_check(value == coset_count,
                 "index differs from the number of cosets");
  out.value = value;
  return out;
}

namespace {

struct BijectionGraph {
  ElemSet domain;
  std::vector<std::pair<ElementId, ElementId>> pairs;  // sorted by first

  bool operator==(const BijectionGraph& other) const {
    return pairs == other.pairs;
  }
};

// Every coset bijection of a comparable pair, as explicit graphs.
std::vector<BijectionGraph> all_bijections(const SkewLatticeAlgebra& s,
                                           const ClassOrder& co,
                                           ClassPair pair) {
  CosetDecomposition dec = coset_partition(s, co, pair);
  std::vector<BijectionGraph> out;
  for (const Coset& up : dec.in_upper)
    for (const Coset& down : dec.in_lower) {
      CosetBijection b = coset_bijection(s, co, up, down);
      BijectionGraph g;
      g.domain = up.elements;
      g.pairs = b.mapping;
      std::sort(g.pairs.begin(), g.pairs.end());
      out.push_back(g);
    }
  return out;
}

struct ChainTriple {
  int top, mid, bot;
};

std::vector<ChainTriple> class_chains3(const ClassOrder& co) {
  std::vector<ChainTriple> out;
  const int m = co.classes.block_count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (a != b && b != c && a != c && co.leq.contains(b, a) &&
            co.leq.contains(c, b))
          out.push_back({a, b, c});
  return out;
}

// Composite of two coset bijections along a class chain; empty domain allowed.
BijectionGraph compose_bijections(const BijectionGraph& upper_to_mid,
                                  const BijectionGraph& mid_to_bot) {
  std::map<ElementId, ElementId> second;
  for (auto [u, v] : mid_to_bot.pairs) second[u] = v;
  BijectionGraph out;
  for (auto [x, y] : upper_to_mid.pairs) {
    auto it = second.find(y);
    if (it != second.end()) {
      out.domain.add(x);
      out.pairs.emplace_back(x, it->second);
    }
  }
  return out;
}

bool categorical_scan(const SkewLatticeAlgebra& s, const ClassOrder& co,
                      bool* composites_never_empty) {
  bool categorical = true;
  bool never_empty = true;
  for (const ChainTriple& tri : class_chains3(co)) {
    auto upper = all_bijections(s, co, make_class_pair(co, tri.top, tri.mid));
    auto lower = all_bijections(s, co, make_class_pair(co, tri.mid, tri.bot));
    auto whole = all_bijections(s, co, make_class_pair(co, tri.top, tri.bot));
    for (const BijectionGraph& phi : upper)
      for (const BijectionGraph& psi : lower) {
        BijectionGraph comp = compose_bijections(phi, psi);
        if (comp.pairs.empty()) {
          never_empty = false;
          continue;
        }
        const bool matches =
            std::any_of(whole.begin(), whole.end(),
                        [&](const BijectionGraph& g) { return g == comp; });
        if (!matches) categorical = false;
      }
  }
  if (composites_never_empty) *composites_never_empty = never_empty;
  return categorical;
}

}  // namespace

bool is_categorical(const SkewLatticeAlgebra& s) {
  ClassOrder co = class_order(s);
  return categorical_scan(s, co, nullptr);
}

bool strictly_categorical_by_cosets(const SkewLatticeAlgebra& s) {
  ClassOrder co = class_order(s);
  bool never_empty = false;
  const bool categorical = categorical_scan(s, co, &never_empty);
  return categorical && never_empty;
}

bool strictly_categorical_by_subalgebras(const SkewLatticeAlgebra& s) {
  // x-up-star normal and x-down-star conormal, as subalgebras, for every x.
  for (ElementId x = 0; x < s.size; ++x) {
    SkewLatticeAlgebra up =
        restrict_to(s, principal_skew_filter(s, x).elements);
    SkewLatticeAlgebra down =
        restrict_to(s, principal_skew_ideal(s, x).elements);
    bool up_normal = true, down_conormal = true;
    for (ElementId a = 0; a < up.size; ++a)
      for (ElementId b = 0; b < up.size; ++b)
        for (ElementId c = 0; c < up.size; ++c)
          for (ElementId d = 0; d < up.size; ++d)
            up_normal = up_normal && up.meet_of(up.meet3(a, b, c), d) ==
                                         up.meet_of(up.meet3(a, c, b), d);
    for (ElementId a = 0; a < down.size; ++a)
      for (ElementId b = 0; b < down.size; ++b)
        for (ElementId c = 0; c < down.size; ++c)
          for (ElementId d = 0; d < down.size; ++d)
            down_conormal = down_conormal &&
                            down.join_of(down.join3(a, b, c), d) ==
                                down.join_of(down.join3(a, c, b), d);
    if (!up_normal || !down_conormal) return false;
  }
  return true;
}

bool is_strictly_categorical(const SkewLatticeAlgebra& s) {
  const bool by_cosets = strictly_categorical_by_cosets(s);
  internal_check(by_cosets == strictly_categorical_by_subalgebras(s),
                 "strict categoricity characterizations disagree");
  return by_cosets;
}

bool check_order_eq_cosets(const SkewLatticeAlgebra& s, const ClassOrder& co,
                           ClassPair pair) {
  if (!is_categorical(s))
    throw std::invalid_argument("check_order_eq_cosets needs a categorical input");
  BinaryRelation leq = natural_leq(s);
  std::vector<std::pair<ElementId, ElementId>> order_pairs, graph_pairs;
  for (ElementId x : co.classes.blocks[pair.upper].to_vector())
    for (ElementId y : co.classes.blocks[pair.lower].to_vector())
      if (leq.contains(y, x)) order_pairs.emplace_back(x, y);
  for (const BijectionGraph& g : all_bijections(s, co, pair))
    for (auto p : g.pairs) graph_pairs.push_back(p);
  std::sort(order_pairs.begin(), order_pairs.end());
  std::sort(graph_pairs.begin(), graph_pairs.end());
  graph_pairs.erase(std::unique(graph_pairs.begin(), graph_pairs.end()),
                    graph_pairs.end());
  return order_pairs == graph_pairs;
}

namespace {

// Downward index of `upper_class` into `lower_class`: the number of
// upper-class cosets inside the lower class, equivalently the size of the
// image of any upper element down there.
int downward_index(const SkewLatticeAlgebra& s, const ClassOrder& co,
                   int upper_class, int lower_class) {
  return coset_index(s, co, make_class_pair(co, upper_class, lower_class),
                     IndexDirection::upper_in_lower)
      .value;
}

}  // namespace

CountingReport counting_check(const SkewLatticeAlgebra& s, const ClassOrder& co,
                              const std::vector<int>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i - 1] == chain[i] ||
        !co.leq.contains(chain[i], chain[i - 1]))
      throw std::invalid_argument("classes do not form a descending chain");

  CountingReport report;
  report.strictly_categorical = is_strictly_categorical(s);
  const int k = static_cast<int>(chain.size());
  for (int i = 0; i + 2 < k; ++i)
    for (int j = i + 1; j + 1 < k; ++j)
      for (int l = j + 1; l < k; ++l) {
        // Window top > mid > bot drawn from the chain.
        const int ca = downward_index(s, co, chain[i], chain[l]);
        const int cb = downward_index(s, co, chain[j], chain[l]);
        const int ba = downward_index(s, co, chain[i], chain[j]);
        if (ca > cb * ba) report.inequality_ok = false;
        if (report.strictly_categorical && ca != cb * ba)
          report.equality_ok = false;
      }
  if (report.strictly_categorical && k >= 2) {
    long long product = 1;
    for (int i = 0; i + 1 < k; ++i)
      product *= downward_index(s, co, chain[i], chain[i + 1]);
    if (product != downward_index(s, co, chain.front(), chain.back()))
      report.product_formula_ok = false;
    // e_i = [C : A_i] with C the bottom class; e_{k+1} divides e_k.
    std::vector<int> e;
    for (int i = 0; i + 1 < k; ++i)
      e.push_back(downward_index(s, co, chain[i], chain.back()));
    e.push_back(1);
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i + 1] == 0 || e[i] % e[i + 1] != 0) report.divisibility_ok = false;
  }
  return report;
}

bool ideal_coset_checks(const SkewLatticeAlgebra& s) {
  ClassOrder co = class_order(s);
  BinaryRelation leq = natural_leq(s);
  for (ElementId x = 0; x < s.size; ++x)
    for (ElementId y = 0; y < s.size; ++y) {
      if (x == y || !leq.contains(y, x)) continue;
      const int cx = co.classes.block_of[x];
      const int cy = co.classes.block_of[y];
      if (cx == cy) continue;
      ClassPair pair = make_class_pair(co, cx, cy);
      CosetDecomposition dec = coset_partition(s, co, pair);
      ElemSet down = principal_skew_ideal(s, x).elements;
      for (const Coset& c : dec.in_lower)
        if ((down & c.elements).empty()) return false;
      ElemSet up = principal_skew_filter(s, y).elements;
      for (const Coset& c : dec.in_upper)
        if ((up & c.elements).empty()) return false;
    }

  // Primitive case: the principal skew sets are image set plus the point.
  if (co.classes.block_count() == 2) {
    const int upper = co.leq.contains(0, 1) ? 1 : 0;
    const int lower = 1 - upper;
    for (ElementId a : co.classes.blocks[upper].to_vector()) {
      ElemSet expect = image_set(s, co, a, lower) | ElemSet::single(a);
      if (principal_skew_ideal(s, a).elements != expect) return false;
    }
    for (ElementId b : co.classes.blocks[lower].to_vector()) {
      ElemSet expect = image_set(s, co, b, upper) | ElemSet::single(b);
      if (principal_skew_filter(s, b).elements != expect) return false;
    }
  }
  return true;
}

bool index_ideal_bound_check(const SkewLatticeAlgebra& s, ElementId x) {
  ClassOrder co = class_order(s);
  BinaryRelation covers = element_cover(s);

  // All maximal descending covering chains from x, as class sequences.
  std::vector<std::vector<ElementId>> chains;
  std::vector<ElementId> path{x};
  auto dfs = [&](auto&& self, ElementId z) -> void {
    bool extended = false;
    for (ElementId y = 0; y < s.size; ++y)
      if (covers.contains(y, z)) {
        extended = true;
        path.push_back(y);
        self(self, y);
        path.pop_back();
      }
    if (!extended) chains.push_back(path);
  };
  dfs(dfs, x);

  const long long down_size = principal_skew_ideal(s, x).elements.count();

  // Per-chain prefix-product bounds with downward step indices, summed over
  // all maximal chains.
  long long total = 1;
  std::vector<long long> per_chain;
  for (const auto& chain : chains) {
    long long prefix = 1, sum = 0;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const int above = co.classes.block_of[chain[i - 1]];
      const int below = co.classes.block_of[chain[i]];
      prefix *= downward_index(s, co, above, below);
      sum += prefix;
    }
    per_chain.push_back(1 + sum);
    total += sum;
  }
  if (down_size > total) return false;

  // When the classes below x are totally ordered and the algebra is strictly
  // categorical, every maximal chain alone carries the bound.
  ElemSet below_classes;
  const int cx = co.classes.block_of[x];
  for (int b = 0; b < co.classes.block_count(); ++b)
    if (b != cx && co.leq.contains(b, cx)) below_classes.add(b);
  bool chain_below = true;
  for (ElementId a : below_classes.to_vector())
    for (ElementId b : below_classes.to_vector())
      if (a != b && !co.leq.contains(a, b) && !co.leq.contains(b, a))
        chain_below = false;
  if (chain_below && is_strictly_categorical(s))
    for (long long bound : per_chain)
      if (down_size > bound) return false;
  return true;
}

}  // namespace skewlat
