#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

enum class Ordering { less, equal, greater };

/// One subset of [n] = {1,...,n} packed into a machine word.
///
/// Elements are 1-based externally; element e maps to bit e-1. The ground
/// set is capped at 64 elements, which covers every desk-scale instance this
/// workbench targets and keeps intersection/popcount O(1).
class SubsetMask {
 public:
  static constexpr int max_ground = 64;

  SubsetMask() = default;
  explicit SubsetMask(int n) : n_(check_n(n)) {}

  static SubsetMask from_bits(int n, std::uint64_t bits);
  static SubsetMask from_elements(int n, const std::vector<int>& elems);
  static SubsetMask full(int n);
  /// Parses the textual form {1,3,7}; {} is the empty set.
  static SubsetMask parse(int n, std::string_view text);

  int ground_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int cardinality() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int e) const { return e >= 1 && e <= n_ && (bits_ >> (e - 1)) & 1u; }
  SubsetMask with(int e) const;
  SubsetMask without(int e) const;

  /// Smallest element, or 0 when empty.
  int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest element, or 0 when empty.
  int max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  bool subset_of(const SubsetMask& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const SubsetMask& other) const { return (bits_ & other.bits_) != 0; }

  /// Elements in increasing order (the LexKey of this subset).
  std::vector<int> elements() const;

  std::string to_string() const;

  friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
    return combined(a, b, a.bits_ & b.bits_);
  }
  friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
    return combined(a, b, a.bits_ | b.bits_);
  }
  friend SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
    return combined(a, b, a.bits_ & ~b.bits_);
  }
  SubsetMask complement() const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  static int check_n(int n);
  static SubsetMask combined(const SubsetMask& a, const SubsetMask& b, std::uint64_t bits);

  std::uint64_t bits_{0};
  int n_{0};
};

/// Lexicographic order on equal-size subsets: A < B iff min(A \ B) < min(B \ A).
/// Throws parameter_error when ground sets or cardinalities differ.
Ordering lex_compare(const SubsetMask& a, const SubsetMask& b);

/// Shifting partial order: a_i <= b_i for the i-th smallest elements.
bool shift_precedes(const SubsetMask& a, const SubsetMask& b);

/// Total order used for storing mixed-cardinality families: element sequences
/// compared lexicographically, a proper prefix sorting first. Coincides with
/// lex_compare on equal-size subsets.
bool storage_less(const SubsetMask& a, const SubsetMask& b);

/// C(n,k) for 0 <= n <= 64 without overflow (fits in uint64 for all such n).
std::uint64_t binom64(int n, int k);

/// All k-subsets of [n] in lex order. Throws parameter_error if k > n, or if
/// the output would exceed `limit` masks.
std::vector<SubsetMask> enumerate_ksubsets(int n, int k, std::uint64_t limit = (1u << 26));

/// Streams k-subsets of [n] in lex order without materializing them.
void for_each_ksubset(int n, int k, const std::function<void(const SubsetMask&)>& fn);

/// As for_each_ksubset, but stops early when the callback returns false.
void for_each_ksubset_until(int n, int k, const std::function<bool(const SubsetMask&)>& fn);

/// Bit mask of the prefix [upto] within ground set [n] (clamped to [0,n]).
std::uint64_t prefix_bits(int n, int upto);

}  // namespace extremal
