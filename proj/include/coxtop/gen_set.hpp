#ifndef COXTOP_GEN_SET_HPP
#define COXTOP_GEN_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace coxtop {

/// A subset of the generating set S, stored as a bitmask over generator
/// indices. Ranks above 64 are rejected at parse time.
class GenSet {
 public:
  static constexpr int kMaxGenerators = 64;

  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr GenSet single(int s) { return GenSet(std::uint64_t{1} << s); }
  static constexpr GenSet full(int n) {
    return GenSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int s) const { return (bits_ >> s) & 1U; }
  constexpr bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(GenSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(GenSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr GenSet with(int s) const { return GenSet(bits_ | (std::uint64_t{1} << s)); }
  constexpr GenSet without(int s) const { return GenSet(bits_ & ~(std::uint64_t{1} << s)); }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSet a, GenSet b) = default;

  /// Generator indices in increasing order.
  std::vector<int> members() const;

  /// Smallest member; -1 when empty.
  constexpr int first() const { return empty() ? -1 : std::countr_zero(bits_); }

 private:
  std::uint64_t bits_ = 0;
};

/// Total order used whenever subsets are listed: by cardinality, then by the
/// sorted member sequence.
bool canonical_less(GenSet a, GenSet b);

/// All subsets of `universe`, in canonical order.
std::vector<GenSet> all_subsets(GenSet universe);

}  // namespace coxtop

#endif
