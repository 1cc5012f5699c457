#ifndef SKEWLAT_ELEMSET_HPP_
#define SKEWLAT_ELEMSET_HPP_

#include <cstdint>
#include <vector>

namespace skewlat {

using ElementId = int;

// Subset of a carrier of at most 64 elements, stored as a bitmask.
// Carriers larger than 64 are rejected at table construction time.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static ElemSet full(int n) {
    return n >= 64 ? ElemSet(~std::uint64_t(0))
                   : ElemSet((std::uint64_t(1) << n) - 1);
  }
  static ElemSet single(ElementId x) { return ElemSet(std::uint64_t(1) << x); }

  bool contains(ElementId x) const { return (bits_ >> x) & 1; }
  void add(ElementId x) { bits_ |= std::uint64_t(1) << x; }
  void remove(ElementId x) { bits_ &= ~(std::uint64_t(1) << x); }
  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  std::uint64_t bits() const { return bits_; }

  bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
  ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  ElemSet operator-(ElemSet o) const { return ElemSet(bits_ & ~o.bits_); }
  bool operator==(ElemSet o) const { return bits_ == o.bits_; }
  bool operator!=(ElemSet o) const { return bits_ != o.bits_; }
  bool operator<(ElemSet o) const { return bits_ < o.bits_; }

  ElementId least() const { return __builtin_ctzll(bits_); }

  std::vector<ElementId> to_vector() const {
    std::vector<ElementId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(__builtin_ctzll(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace skewlat

#endif  // SKEWLAT_ELEMSET_HPP_
