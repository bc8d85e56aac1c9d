#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace hbcast {

/// 1-based user / vertex identifier.
using VertexId = std::uint32_t;

/// A set of vertex ids in [1, 64], stored as a bitmask (bit k-1 <=> vertex k).
///
/// Ordering is lexicographic over the ascending id lists, so {1,2,3} < {1,4} < {2,3}.
/// Every container keyed by VertexSet iterates edges in that order.
class VertexSet {
 public:
  static constexpr VertexId kMaxVertex = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr VertexId operator*() const {
      return static_cast<VertexId>(std::countr_zero(rest_)) + 1;
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {first, first+1, ..., last}; empty when last < first.
  static VertexSet interval(VertexId first, VertexId last);
  static VertexSet from_ids(const std::vector<VertexId>& ids);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(VertexId v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  /// Smallest id; undefined on an empty set.
  constexpr VertexId lowest() const { return static_cast<VertexId>(std::countr_zero(bits_)) + 1; }

  void insert(VertexId v);
  void erase(VertexId v);

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(VertexSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // The lowest differing id belongs to exactly one side. The other side either has a
    // larger element at that position (so the owner is smaller) or has run out (so the
    // owner is longer and compares greater).
    const int k = std::countr_zero(diff);
    const bool in_a = ((a.bits_ >> k) & 1U) != 0;
    const std::uint64_t other_rest = (in_a ? b.bits_ : a.bits_) >> k;
    const bool owner_is_smaller = other_rest != 0;
    if (in_a) return owner_is_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
    return owner_is_smaller ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,2,3}"
std::string to_string(VertexSet s);

}  // namespace hbcast
