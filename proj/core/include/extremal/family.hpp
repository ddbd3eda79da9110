#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "extremal/subset.hpp"

namespace extremal {

/// Wise-arity r >= 2 and intersection threshold t >= 1 of Definition 1.1-style
/// predicates: every r members (repetition allowed) share at least t elements.
struct IntersectSpec {
  int r;
  int t;
};

/// A duplicate-free collection of subsets of a common [n], kept sorted in
/// storage order so equality and membership are canonical.
class SetFamily {
 public:
  explicit SetFamily(int n) : n_(n) {}
  SetFamily(int n, std::optional<int> uniform_k) : n_(n), requested_k_(uniform_k) {}

  /// Validates ground sets, sorts, and removes duplicates. If `uniform_k` is
  /// given, every member must have that cardinality.
  static SetFamily of(int n, std::vector<SubsetMask> members,
                      std::optional<int> uniform_k = std::nullopt);

  int ground_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Uniform cardinality: the construction-time k if one was requested,
  /// otherwise the common member cardinality; nullopt for mixed families.
  std::optional<int> uniform_k() const;

  const std::vector<SubsetMask>& members() const { return members_; }
  const SubsetMask& member(std::size_t i) const { return members_[i]; }
  bool contains(const SubsetMask& m) const;

  /// Intersection of all members; parameter_error when the family is empty.
  SubsetMask common_intersection() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_{0};
  std::optional<int> requested_k_;
  std::vector<SubsetMask> members_;
};

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

/// Full star: all k-subsets of [n] containing the kernel T.
SetFamily build_star(int n, int k, const SubsetMask& T);

/// A(n,k,s): k-subsets meeting [s] in at least s-1 elements.
SetFamily build_A(int n, int k, int s);

/// B(n,k,s): k-subsets containing [s-2] and touching [s-1,k+1], together with
/// the s-2 sets [k+1] minus one element of [s-2].
SetFamily build_B(int n, int k, int s);

/// B_s(n,r,t): all subsets of [n] missing at most s elements of [t+rs].
SetFamily build_Bs(int n, int r, int t, int s);

/// k-uniform restriction of B_s(n,r,t).
SetFamily build_Bs_uniform(int n, int k, int r, int t, int s);

/// L(n,k,m): the first m k-subsets of [n] in lex order.
SetFamily build_lex(int n, int k, std::uint64_t m);

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// Every r members (with repetition, equivalently every <= r distinct members)
/// intersect in at least t elements. Empty families pass vacuously.
bool is_rwise_t_intersecting(const SetFamily& f, const IntersectSpec& spec);

/// |common intersection| < t. parameter_error on the empty family.
bool is_nontrivial(const SetFamily& f, int t);

/// Pairwise cross t-intersection across two or more families on a common [n].
bool are_cross_t_intersecting(const std::vector<SetFamily>& families, int t);

/// 2-wise t-intersecting with some pair meeting in exactly t elements
/// (a singleton family qualifies iff its member has exactly t elements).
bool is_exactly_2wise_t(const SetFamily& f, int t);

// ---------------------------------------------------------------------------
// Quotients and slices
// ---------------------------------------------------------------------------

/// F(P,Q) = { F \ Q : F in F, F cap Q = P }. Members keep the original
/// ground-set labels; they simply avoid Q.
SetFamily quotient(const SetFamily& f, const SubsetMask& P, const SubsetMask& Q);

/// F(P) shorthand for F(P,P).
SetFamily quotient(const SetFamily& f, const SubsetMask& P);

/// F_i: members meeting [t+3] in exactly t+3-i elements.
SetFamily slice(const SetFamily& f, int t, int i);

/// Residuals beyond [t+3] of the F_i members whose trace on [t+3] is T.
SetFamily tilde_slice(const SetFamily& f, int t, int i, const SubsetMask& T);

/// The slices F_0 .. F_{t+3}; they partition any k-uniform family.
std::vector<SetFamily> family_union_decomposition(const SetFamily& f, int t);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// Text family file: header `n=<n> k=<k|mixed>`, one subset per line, sorted.
std::string to_family_text(const SetFamily& f);
SetFamily from_family_text(const std::string& text);
void save_family(const SetFamily& f, const std::string& path);
SetFamily load_family(const std::string& path);

nlohmann::json to_family_json(const SetFamily& f);
SetFamily from_family_json(const nlohmann::json& j);

/// Relabels every member under a permutation of [n] (perm[i-1] is the image
/// of element i). Used by shifting tests and the CLI.
SetFamily apply_permutation(const SetFamily& f, const std::vector<int>& perm);

}  // namespace extremal
