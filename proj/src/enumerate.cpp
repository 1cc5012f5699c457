#include "skewlat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <thread>

namespace skewlat {

namespace {

// Joint backtracking state over both tables. Cells hold -1 when unassigned;
// forced assignments are recorded on a trail for undo.
struct Search {
  int n;
  bool force_right, force_left;
  std::vector<int8_t> meet, join;  // n*n, -1 = unassigned
  std::vector<int> trail;          // encoded cell: op * n * n + i * n + j
  bool failed = false;

  explicit Search(int order, bool right, bool left)
      : n(order),
        force_right(right),
        force_left(left),
        meet(static_cast<std::size_t>(order) * order, -1),
        join(static_cast<std::size_t>(order) * order, -1) {
    for (int i = 0; i < n; ++i) {
      meet[static_cast<std::size_t>(i) * n + i] = static_cast<int8_t>(i);
      join[static_cast<std::size_t>(i) * n + i] = static_cast<int8_t>(i);
    }
  }

  int8_t& cell(int op, int i, int j) {
    return (op == 0 ? meet : join)[static_cast<std::size_t>(i) * n + j];
  }
  int8_t get(int op, int i, int j) const {
    return (op == 0 ? meet : join)[static_cast<std::size_t>(i) * n + j];
  }

  // Assign with consistency checks; pushes to the trail. Returns false on
  // conflict.
  bool assign(int op, int i, int j, int v) {
    int8_t& c = cell(op, i, j);
    if (c != -1) return c == v;
    c = static_cast<int8_t>(v);
    trail.push_back(op * n * n + i * n + j);
    return propagate(op, i, j, v);
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const int code = trail.back();
      trail.pop_back();
      const int op = code / (n * n);
      const int rest = code % (n * n);
      cell(op, rest / n, rest % n) = -1;
    }
  }

  bool propagate(int op, int i, int j, int v) {
    if (!duality(op, i, j, v)) return false;
    if (!absorption(op, i, j, v)) return false;
    if (!associativity(op, i, j)) return false;
    if ((force_right || force_left) && !handed(op, i, j, v)) return false;
    return true;
  }

  // x v y = x iff x ^ y = y, and x v y = y iff x ^ y = x.
  bool duality(int op, int i, int j, int v) {
    const int other = 1 - op;
    const int8_t o = get(other, i, j);
    // For the meet cell: v == j forces join = i, v == i forces join = j,
    // anything else forbids join in {i, j}. Symmetrically for join.
    const int forced_from_j = op == 0 ? (v == j ? i : (v == i ? j : -1))
                                      : (v == i ? j : (v == j ? i : -1));
    if (forced_from_j != -1) return assign(other, i, j, forced_from_j);
    if (o != -1 && (o == i || o == j)) return false;
    return true;
  }

  bool absorption(int op, int i, int j, int v) {
    if (op == 0) {
      // meet[i][j] = v: x v (x ^ y) = x gives join[i][v] = i;
      // (y ^ x) v x = x gives join[v][j] = j.
      if (!assign(1, i, v, i)) return false;
      if (!assign(1, v, j, j)) return false;
      // Reverse direction of the join-side laws that read this cell:
      // x ^ (x v y) = x when v happens to be a join value is handled by the
      // join branch; nothing further here.
    } else {
      // join[i][j] = v: x ^ (x v y) = x gives meet[i][v] = i;
      // (y v x) ^ x = x gives meet[v][j] = j.
      if (!assign(0, i, v, i)) return false;
      if (!assign(0, v, j, j)) return false;
    }
    return true;
  }

  // Incremental associativity for the table that just changed: every triple
  // (a,b,c) whose evaluation uses cell (i,j) is revisited; when three of the
  // four cells are known the fourth is forced.
  bool associativity(int op, int i, int j) {
    auto T = [&](int a, int b) { return get(op, a, b); };
    auto triple = [&](int a, int b, int c) -> bool {
      const int p = T(a, b);
      const int r = T(b, c);
      if (p == -1 && r == -1) return true;
      if (p != -1 && r != -1) {
        const int q = T(p, c);
        const int t = T(a, r);
        if (q != -1 && t != -1) return q == t;
        if (q != -1) return assign(op, a, r, q);
        if (t != -1) return assign(op, p, c, t);
        return true;
      }
      return true;
    };
    for (int c = 0; c < n; ++c)
      if (!triple(i, j, c)) return false;
    for (int a = 0; a < n; ++a)
      if (!triple(a, i, j)) return false;
    // New cell as the left composite T[p][c] with p = T[a][b]:
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (T(a, b) == i && !triple(a, b, j)) return false;
    // New cell as the right composite T[a][r] with r = T[b][c]:
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (T(b, c) == j && !triple(i, b, c)) return false;
    return true;
  }

  // One-sided identities: right-handed means x^y^x = y^x and xvyvx = xvy;
  // left-handed the mirror images.
  bool handed(int op, int i, int j, int v) {
    if (force_right) {
      if (op == 0) {
        // meet[v][i] = meet[j][i]; propagate in whichever direction is known.
        const int8_t w = get(0, j, i);
        if (w != -1 && !assign(0, v, i, w)) return false;
        const int8_t u = get(0, v, i);
        if (u != -1 && !assign(0, j, i, u)) return false;
      } else {
        if (!assign(1, v, i, v)) return false;
      }
    }
    if (force_left) {
      if (op == 0) {
        if (!assign(0, v, i, v)) return false;
      } else {
        const int8_t w = get(1, j, i);
        if (w != -1 && !assign(1, v, i, w)) return false;
        const int8_t u = get(1, v, i);
        if (u != -1 && !assign(1, j, i, u)) return false;
      }
    }
    return true;
  }
};

bool satisfies_filters(const SkewLatticeAlgebra& s,
                       const EnumerationSpec& spec) {
  if (spec.normal) {
    for (ElementId a = 0; a < s.size; ++a)
      for (ElementId b = 0; b < s.size; ++b)
        for (ElementId c = 0; c < s.size; ++c)
          for (ElementId d = 0; d < s.size; ++d)
            if (s.meet_of(s.meet3(a, b, c), d) !=
                s.meet_of(s.meet3(a, c, b), d))
              return false;
  }
  if (spec.symmetric) {
    for (ElementId a = 0; a < s.size; ++a)
      for (ElementId b = 0; b < s.size; ++b)
        if ((s.meet_of(a, b) == s.meet_of(b, a)) !=
            (s.join_of(a, b) == s.join_of(b, a)))
          return false;
  }
  return true;
}

std::vector<std::uint8_t> raw_key(const SkewLatticeAlgebra& s) {
  std::vector<std::uint8_t> out;
  for (ElementId v : s.meet.entries()) out.push_back(static_cast<std::uint8_t>(v));
  for (ElementId v : s.join.entries()) out.push_back(static_cast<std::uint8_t>(v));
  return out;
}

void dfs_cells(Search& st, const std::vector<std::pair<int, int>>& cells,
               std::size_t idx, const EnumerationSpec& spec,
               std::vector<SkewLatticeAlgebra>& out) {
  // Find next unassigned cell; cells lists (op, flat) pairs in fixed order.
  while (idx < cells.size() &&
         st.get(cells[idx].first, cells[idx].second / st.n,
                cells[idx].second % st.n) != -1)
    ++idx;
  if (idx == cells.size()) {
    std::vector<ElementId> meet(st.meet.begin(), st.meet.end());
    std::vector<ElementId> join(st.join.begin(), st.join.end());
    ValidationReport rep =
        validate(OpTable(st.n, meet), OpTable(st.n, join));
    internal_check(rep.passed, "search emitted a non skew lattice");
    SkewLatticeAlgebra algebra{
        st.n, {}, OpTable(st.n, meet), OpTable(st.n, join), true};
    if (satisfies_filters(algebra, spec)) out.push_back(algebra);
    return;
  }
  const auto [op, flat] = cells[idx];
  const int i = flat / st.n, j = flat % st.n;
  for (int v = 0; v < st.n; ++v) {
    const std::size_t mark = st.trail.size();
    if (st.assign(op, i, j, v)) dfs_cells(st, cells, idx + 1, spec, out);
    st.undo_to(mark);
  }
}

}  // namespace

std::vector<std::uint8_t> canonical_key(const SkewLatticeAlgebra& s) {
  const int n = s.size;
  // Signature: (D-class size, #below, #above) per element; permutations must
  // map signature groups onto identically ranked position blocks, which is
  // isomorphism-invariant and prunes the n! search.
  auto leq = [&](ElementId y, ElementId x) {
    return s.meet_of(x, y) == y && s.meet_of(y, x) == y;
  };
  auto d_rel = [&](ElementId x, ElementId y) {
    return s.meet3(x, y, x) == x && s.meet3(y, x, y) == y;
  };
  std::vector<std::array<int, 3>> sig(n, {0, 0, 0});
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (d_rel(x, y)) ++sig[x][0];
      if (leq(y, x)) ++sig[x][1];
      if (leq(x, y)) ++sig[x][2];
    }
  // Position blocks: elements ordered by signature; ties form a group whose
  // images may permute freely.
  std::vector<ElementId> by_sig(n);
  for (int i = 0; i < n; ++i) by_sig[i] = i;
  std::stable_sort(by_sig.begin(), by_sig.end(),
                   [&](ElementId a, ElementId b) { return sig[a] < sig[b]; });

  std::vector<std::uint8_t> best;
  std::vector<ElementId> perm(n, -1);  // element -> position
  auto relabeled = [&]() {
    std::vector<std::uint8_t> key;
    key.reserve(2 * n * n);
    for (int t = 0; t < 2; ++t) {
      const OpTable& table = t == 0 ? s.meet : s.join;
      std::vector<ElementId> inv(n);
      for (ElementId e = 0; e < n; ++e) inv[perm[e]] = e;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          key.push_back(static_cast<std::uint8_t>(perm[table(inv[i], inv[j])]));
    }
    return key;
  };
  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      std::vector<std::uint8_t> key = relabeled();
      if (best.empty() || key < best) best = key;
      return;
    }
    // Candidates for this position: unplaced elements with the same
    // signature as the one stable-sorted here.
    for (ElementId e : by_sig)
      if (perm[e] == -1 && sig[e] == sig[by_sig[pos]]) {
        perm[e] = pos;
        self(self, pos + 1);
        perm[e] = -1;
      }
  };
  dfs(dfs, 0);
  return best;
}

std::vector<SkewLatticeAlgebra> enumerate_all(const EnumerationSpec& spec) {
  const bool handedness_restricted = spec.right_handed || spec.left_handed;
  const int cap = handedness_restricted ? spec.max_restricted_order
                                        : spec.max_exhaustive_order;
  if (spec.order < 1)
    throw std::invalid_argument("enumeration order must be at least 1");
  if (spec.order > cap)
    throw std::invalid_argument("enumeration order exceeds the feasibility cap");
  if (spec.threads < 1)
    throw std::invalid_argument("thread count must be positive");

  const int n = spec.order;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        cells.emplace_back(0, i * n + j);
        cells.emplace_back(1, i * n + j);
      }

  std::vector<SkewLatticeAlgebra> found;
  if (cells.empty()) {
    Search st(n, spec.right_handed, spec.left_handed);
    dfs_cells(st, cells, 0, spec, found);
  } else {
    // Split the first cell's value choices across workers; each worker owns
    // an independent search state, and results are merged then sorted.
    const int workers = std::min(spec.threads, n);
    std::vector<std::vector<SkewLatticeAlgebra>> partial(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w]() {
        Search st(n, spec.right_handed, spec.left_handed);
        const auto [op, flat] = cells[0];
        for (int v = w; v < n; v += workers) {
          const std::size_t mark = st.trail.size();
          if (st.assign(op, flat / n, flat % n, v))
            dfs_cells(st, cells, 1, spec, partial[w]);
          st.undo_to(mark);
        }
      });
    for (auto& th : pool) th.join();
    for (auto& part : partial)
      found.insert(found.end(), part.begin(), part.end());
  }

  if (spec.up_to_iso) {
    // One representative per canonical key, rebuilt from the key itself so
    // the output does not depend on discovery order.
    std::set<std::vector<std::uint8_t>> keys;
    std::vector<SkewLatticeAlgebra> dedup;
    for (const SkewLatticeAlgebra& a : found) keys.insert(canonical_key(a));
    for (const std::vector<std::uint8_t>& key : keys) {
      std::vector<ElementId> meet(key.begin(), key.begin() + n * n);
      std::vector<ElementId> join(key.begin() + n * n, key.end());
      dedup.push_back(make_algebra(OpTable(n, meet), OpTable(n, join)));
    }
    found = std::move(dedup);
  } else {
    std::sort(found.begin(), found.end(),
              [](const SkewLatticeAlgebra& a, const SkewLatticeAlgebra& b) {
                return raw_key(a) < raw_key(b);
              });
  }
  if (spec.limit && static_cast<long long>(found.size()) > *spec.limit)
    found.resize(static_cast<std::size_t>(*spec.limit));
  return found;
}

}  // namespace skewlat
