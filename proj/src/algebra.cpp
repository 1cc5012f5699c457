#include "skewlat/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace skewlat {

namespace {
constexpr int kMaxCarrier = 64;
}

OpTable::OpTable(int n, std::vector<ElementId> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxCarrier)
    throw std::invalid_argument("operation table size must be in [1, 64]");
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("operation table is not n x n");
}

OpTable OpTable::from_rows(const std::vector<std::vector<ElementId>>& rows) {
  std::vector<ElementId> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw std::invalid_argument("operation table is not n x n");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return OpTable(static_cast<int>(rows.size()), flat);
}

void internal_error(const std::string& what) {
  throw std::logic_error("internal consistency failure: " + what);
}

ValidationReport validate(const OpTable& meet, const OpTable& join) {
  ValidationReport report;
  if (meet.size() != join.size()) {
    report.structural_error = "meet and join tables have different sizes";
    return report;
  }
  const int n = meet.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (meet(x, y) < 0 || meet(x, y) >= n || join(x, y) < 0 ||
          join(x, y) >= n) {
        report.structural_error = "table entry out of range at (" +
                                  std::to_string(x) + "," + std::to_string(y) +
                                  ")";
        return report;
      }
    }
  }

  auto first_failure = [&](const std::string& law, auto&& pred, int arity) {
    std::array<ElementId, 4> t{0, 0, 0, 0};
    auto scan = [&](auto&& self, int depth) -> bool {
      if (depth == arity) return pred(t);
      for (t[depth] = 0; t[depth] < n; ++t[depth])
        if (!self(self, depth + 1)) return false;
      return true;
    };
    if (!scan(scan, 0))
      report.failures.push_back(
          {law, std::vector<ElementId>(t.begin(), t.begin() + arity)});
  };

  using T = const std::array<ElementId, 4>&;
  first_failure("idempotent-meet",
                [&](T t) { return meet(t[0], t[0]) == t[0]; }, 1);
  first_failure("idempotent-join",
                [&](T t) { return join(t[0], t[0]) == t[0]; }, 1);
  first_failure("associative-meet",
                [&](T t) {
                  return meet(meet(t[0], t[1]), t[2]) ==
                         meet(t[0], meet(t[1], t[2]));
                },
                3);
  first_failure("associative-join",
                [&](T t) {
                  return join(join(t[0], t[1]), t[2]) ==
                         join(t[0], join(t[1], t[2]));
                },
                3);
  // (y^x)vx = x = xv(x^y) and the duals x^(xvy) = x = (yvx)^x.
  first_failure("absorb-join-right",
                [&](T t) { return join(meet(t[1], t[0]), t[0]) == t[0]; }, 2);
  first_failure("absorb-join-left",
                [&](T t) { return join(t[0], meet(t[0], t[1])) == t[0]; }, 2);
  first_failure("absorb-meet-left",
                [&](T t) { return meet(t[0], join(t[0], t[1])) == t[0]; }, 2);
  first_failure("absorb-meet-right",
                [&](T t) { return meet(join(t[1], t[0]), t[0]) == t[0]; }, 2);
  first_failure("duality-left",
                [&](T t) {
                  return (join(t[0], t[1]) == t[0]) ==
                         (meet(t[0], t[1]) == t[1]);
                },
                2);
  first_failure("duality-right",
                [&](T t) {
                  return (join(t[0], t[1]) == t[1]) ==
                         (meet(t[0], t[1]) == t[0]);
                },
                2);

  report.passed = report.failures.empty();
  return report;
}

SkewLatticeAlgebra make_algebra(const OpTable& meet, const OpTable& join,
                                std::vector<std::string> names) {
  ValidationReport report = validate(meet, join);
  if (!report.structurally_ok())
    throw std::invalid_argument(report.structural_error);
  if (!report.passed)
    throw std::invalid_argument("not a skew lattice: " +
                                report.failures.front().law + " fails");
  if (!names.empty() && names.size() != static_cast<std::size_t>(meet.size()))
    throw std::invalid_argument("name list does not match carrier size");
  return SkewLatticeAlgebra{meet.size(), std::move(names), meet, join, true};
}

SkewLatticeAlgebra make_rectangular(int l_size, int r_size) {
  if (l_size < 1 || r_size < 1)
    throw std::invalid_argument("rectangular factors must be nonempty");
  const int n = l_size * r_size;
  std::vector<ElementId> meet(static_cast<std::size_t>(n) * n);
  std::vector<ElementId> join(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < l_size; ++i)
    for (int j = 0; j < r_size; ++j)
      for (int k = 0; k < l_size; ++k)
        for (int l = 0; l < r_size; ++l) {
          const int a = i * r_size + j;
          const int b = k * r_size + l;
          meet[static_cast<std::size_t>(a) * n + b] = i * r_size + l;
          join[static_cast<std::size_t>(a) * n + b] = k * r_size + j;
        }
  return make_algebra(OpTable(n, meet), OpTable(n, join));
}

SkewLatticeAlgebra direct_product(const SkewLatticeAlgebra& s,
                                  const SkewLatticeAlgebra& t) {
  if (!s.validated || !t.validated)
    throw std::invalid_argument("direct_product requires validated algebras");
  const int n = s.size * t.size;
  std::vector<ElementId> meet(static_cast<std::size_t>(n) * n);
  std::vector<ElementId> join(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int sx = a / t.size, tx = a % t.size;
      const int sy = b / t.size, ty = b % t.size;
      meet[static_cast<std::size_t>(a) * n + b] =
          s.meet_of(sx, sy) * t.size + t.meet_of(tx, ty);
      join[static_cast<std::size_t>(a) * n + b] =
          s.join_of(sx, sy) * t.size + t.join_of(tx, ty);
    }
  return make_algebra(OpTable(n, meet), OpTable(n, join));
}

namespace {

SkewLatticeAlgebra chain(int k) {
  std::vector<ElementId> meet(static_cast<std::size_t>(k) * k);
  std::vector<ElementId> join(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      meet[static_cast<std::size_t>(x) * k + y] = std::min(x, y);
      join[static_cast<std::size_t>(x) * k + y] = std::max(x, y);
    }
  return make_algebra(OpTable(k, meet), OpTable(k, join));
}

SkewLatticeAlgebra lattice_from_order(
    int n, const std::vector<std::pair<int, int>>& strict_pairs,
    std::vector<std::string> names) {
  // leq as down/up sets, then meet/join as inf/sup (callers only pass
  // genuine lattice orders).
  std::vector<ElemSet> below(n), above(n);
  for (int x = 0; x < n; ++x) {
    below[x].add(x);
    above[x].add(x);
  }
  for (auto [lo, hi] : strict_pairs) {
    below[hi].add(lo);
    above[lo].add(hi);
  }
  auto inf = [&](int x, int y) -> ElementId {
    ElemSet common = below[x] & below[y];
    for (ElementId c : common.to_vector())
      if (common.subset_of(below[c])) return c;
    throw std::logic_error("order is not a lattice");
  };
  auto sup = [&](int x, int y) -> ElementId {
    ElemSet common = above[x] & above[y];
    for (ElementId c : common.to_vector())
      if (common.subset_of(above[c])) return c;
    throw std::logic_error("order is not a lattice");
  };
  std::vector<ElementId> meet(static_cast<std::size_t>(n) * n);
  std::vector<ElementId> join(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      meet[static_cast<std::size_t>(x) * n + y] = inf(x, y);
      join[static_cast<std::size_t>(x) * n + y] = sup(x, y);
    }
  return make_algebra(OpTable(n, meet), OpTable(n, join), std::move(names));
}

}  // namespace

SkewLatticeAlgebra builtin(const std::string& name) {
  // Published Cayley tables, element order 0,a,b,c,1 -> ids 0..4.
  if (name == "NC5R") {
    OpTable meet = OpTable::from_rows({{0, 0, 0, 0, 0},
                                       {0, 1, 2, 0, 1},
                                       {0, 1, 2, 0, 2},
                                       {0, 0, 0, 3, 3},
                                       {0, 1, 2, 3, 4}});
    OpTable join = OpTable::from_rows({{0, 1, 2, 3, 4},
                                       {1, 1, 1, 4, 4},
                                       {2, 2, 2, 4, 4},
                                       {3, 4, 4, 3, 4},
                                       {4, 4, 4, 4, 4}});
    return make_algebra(meet, join, {"0", "a", "b", "c", "1"});
  }
  if (name == "NC5L") {
    OpTable meet = OpTable::from_rows({{0, 0, 0, 0, 0},
                                       {0, 1, 1, 0, 1},
                                       {0, 2, 2, 0, 2},
                                       {0, 0, 0, 3, 3},
                                       {0, 1, 2, 3, 4}});
    OpTable join = OpTable::from_rows({{0, 1, 2, 3, 4},
                                       {1, 1, 2, 4, 4},
                                       {2, 1, 2, 4, 4},
                                       {3, 4, 4, 3, 4},
                                       {4, 4, 4, 4, 4}});
    return make_algebra(meet, join, {"0", "a", "b", "c", "1"});
  }
  if (name == "M2")
    return lattice_from_order(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}},
                              {"0", "a", "b", "1"});
  if (name == "N5")
    return lattice_from_order(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}},
        {"0", "a", "b", "c", "1"});
  if (name.rfind("chain_", 0) == 0) {
    const std::string tail = name.substr(6);
    if (!tail.empty() &&
        std::all_of(tail.begin(), tail.end(),
                    [](char c) { return c >= '0' && c <= '9'; })) {
      const int k = std::stoi(tail);
      if (k >= 1 && k <= kMaxCarrier) return chain(k);
    }
  }
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

bool is_lattice(const SkewLatticeAlgebra& s) {
  bool meet_comm = true, join_comm = true;
  for (ElementId x = 0; x < s.size && meet_comm; ++x)
    for (ElementId y = 0; y < s.size && meet_comm; ++y)
      meet_comm = s.meet_of(x, y) == s.meet_of(y, x);
  for (ElementId x = 0; x < s.size && join_comm; ++x)
    for (ElementId y = 0; y < s.size && join_comm; ++y)
      join_comm = s.join_of(x, y) == s.join_of(y, x);
  internal_check(meet_comm == join_comm,
                 "commutativity of meet and join must coincide");
  return meet_comm;
}

namespace {

// Isomorphism-invariant fingerprint of an element: (its D-class size, how
// many elements lie below / above it in the natural partial order). Used to
// restrict candidate images during the backtracking search.
std::vector<std::array<int, 3>> element_signatures(
    const SkewLatticeAlgebra& s) {
  const int n = s.size;
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
  return sig;
}

}  // namespace

std::optional<IsoWitness> find_isomorphism(const SkewLatticeAlgebra& s,
                                           const SkewLatticeAlgebra& t) {
  if (!s.validated || !t.validated)
    throw std::invalid_argument("find_isomorphism requires validated algebras");
  if (s.size != t.size) return std::nullopt;
  const int n = s.size;
  auto sig_s = element_signatures(s);
  auto sig_t = element_signatures(t);

  std::vector<std::vector<ElementId>> candidates(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y)
      if (sig_s[x] == sig_t[y]) candidates[x].push_back(y);
    if (candidates[x].empty()) return std::nullopt;
  }

  std::vector<ElementId> map(n, -1);
  std::vector<bool> used(n, false);
  std::vector<ElementId> result;

  // Elements are assigned in id order, so the image of p is known iff p <= x.
  auto image = [&](ElementId p, ElementId x, ElementId y) -> ElementId {
    if (p < x) return map[p];
    if (p == x) return y;
    return -1;
  };
  auto compatible = [&](ElementId x, ElementId y) {
    for (ElementId z = 0; z <= x; ++z) {
      const ElementId zi = image(z, x, y);
      const ElementId m1 = image(s.meet_of(x, z), x, y);
      if (m1 != -1 && m1 != t.meet_of(y, zi)) return false;
      const ElementId m2 = image(s.meet_of(z, x), x, y);
      if (m2 != -1 && m2 != t.meet_of(zi, y)) return false;
      const ElementId j1 = image(s.join_of(x, z), x, y);
      if (j1 != -1 && j1 != t.join_of(y, zi)) return false;
      const ElementId j2 = image(s.join_of(z, x), x, y);
      if (j2 != -1 && j2 != t.join_of(zi, y)) return false;
    }
    return true;
  };
  // Products landing above the assignment frontier are invisible to
  // `compatible`, so each complete map is verified in full.
  auto complete_ok = [&]() {
    for (ElementId u = 0; u < n; ++u)
      for (ElementId v = 0; v < n; ++v) {
        if (map[s.meet_of(u, v)] != t.meet_of(map[u], map[v])) return false;
        if (map[s.join_of(u, v)] != t.join_of(map[u], map[v])) return false;
      }
    return true;
  };
  auto dfs = [&](auto&& self, int x) -> bool {
    if (x == n) {
      if (!complete_ok()) return false;
      result = map;
      return true;
    }
    for (ElementId y : candidates[x]) {
      if (used[y] || !compatible(x, y)) continue;
      map[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      map[x] = -1;
      used[y] = false;
    }
    return false;
  };
  if (dfs(dfs, 0)) return IsoWitness{result};
  return std::nullopt;
}

SkewLatticeAlgebra dualize(const SkewLatticeAlgebra& s) {
  if (!s.validated)
    throw std::invalid_argument("dualize requires a validated algebra");
  return SkewLatticeAlgebra{s.size, s.names, s.join, s.meet, true};
}

SkewLatticeAlgebra restrict_to(const SkewLatticeAlgebra& s, ElemSet subset) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  std::vector<ElementId> members = subset.to_vector();
  std::vector<ElementId> index(s.size, -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    index[members[i]] = static_cast<ElementId>(i);
  const int n = static_cast<int>(members.size());
  std::vector<ElementId> meet(static_cast<std::size_t>(n) * n);
  std::vector<ElementId> join(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ElementId m = s.meet_of(members[i], members[j]);
      const ElementId v = s.join_of(members[i], members[j]);
      if (index[m] == -1 || index[v] == -1)
        throw std::invalid_argument("subset is not closed under operations");
      meet[static_cast<std::size_t>(i) * n + j] = index[m];
      join[static_cast<std::size_t>(i) * n + j] = index[v];
    }
  std::vector<std::string> names;
  if (s.has_names())
    for (ElementId m : members) names.push_back(s.names[m]);
  return make_algebra(OpTable(n, meet), OpTable(n, join), std::move(names));
}

}  // namespace skewlat
