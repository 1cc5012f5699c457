#ifndef SKEWLAT_ENUMERATE_HPP_
#define SKEWLAT_ENUMERATE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "skewlat/algebra.hpp"

namespace skewlat {

// Exhaustive generation of all skew lattices of a small order. The caps are
// configuration: exceeding them raises an error rather than truncating.
struct EnumerationSpec {
  int order = 1;
  bool right_handed = false;
  bool left_handed = false;
  bool normal = false;
  bool symmetric = false;
  bool up_to_iso = false;
  std::optional<long long> limit;
  int threads = 1;
  int max_exhaustive_order = 5;
  int max_restricted_order = 6;
};

// Lexicographically least concatenation of both relabeled tables over all
// carrier permutations compatible with the element signatures. Equal keys
// mean isomorphic algebras.
std::vector<std::uint8_t> canonical_key(const SkewLatticeAlgebra& s);

// Depth-first joint search over both tables: idempotency prefilled, duality
// and absorption applied as forcing rules, associativity propagated on
// completed triples. Every emitted algebra validates. Output is sorted by
// canonical key (up_to_iso) or raw table bytes, so it does not depend on the
// thread count.
std::vector<SkewLatticeAlgebra> enumerate_all(const EnumerationSpec& spec);

}  // namespace skewlat

#endif  // SKEWLAT_ENUMERATE_HPP_
