#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extremal/exactmath.hpp"
#include "extremal/family.hpp"

namespace extremal {

enum class SearchMode { g, h, cross_sum };
enum class ProofKind { exhaustive, branch_bound };

/// One exact maximization instance over family space.
struct SearchProblem {
  int n = 0;
  int k = 0;
  IntersectSpec spec{2, 1};
  SearchMode mode = SearchMode::g;
  int m = 0;        // cross_sum only: number of families
  int cross_t = 1;  // cross_sum only: pairwise threshold
};

struct SearchOptions {
  /// Restrict to families down-closed under the shifting partial order.
  /// Sound for g everywhere; for h only when n >= 2k-t (enforced).
  bool assume_shifted = false;
  /// Full enumeration of feasible families, no bounding: guarantees the
  /// lex-minimal witness. Intended for oracle-size instances.
  bool exhaustive = false;
  std::uint64_t node_budget = 0;  // 0 = default_node_budget()
  int threads = 1;
};

struct SearchOutcome {
  ExactInt optimum = 0;
  SetFamily witness{0};
  std::vector<SetFamily> witnesses;  // cross_sum mode
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0.0;
  ProofKind proof = ProofKind::branch_bound;
  bool exact = true;
  ExactInt upper_bound = 0;  // equals optimum when exact
  bool witness_lex_minimal = false;
  std::string note;
};

/// Node budget: EXTREMAL_BUDGET from the environment, else 10^9.
std::uint64_t default_node_budget();

/// Maximum size of an r-wise t-intersecting subfamily of C([n],k).
SearchOutcome solve_g(int n, int k, int r, int t, const SearchOptions& opts = {});

/// Maximum size of a non-trivial r-wise t-intersecting subfamily of C([n],k).
SearchOutcome solve_h(int n, int k, int r, int t, const SearchOptions& opts = {});

/// Maximum of |A_1|+...+|A_m| over pairwise cross t-intersecting m-tuples of
/// subfamilies of C([n],k). Requires m >= 2; tiny instances only.
SearchOutcome solve_cross_sum(int n, int k, int m, int t, const SearchOptions& opts = {});

/// Maximum size of an r-wise t-intersecting family in 2^[n] (non-uniform).
/// Searches up-closed families, which is lossless for the maximum.
SearchOutcome solve_g_nonuniform(int n, int r, int t, const SearchOptions& opts = {});

SearchOutcome solve(const SearchProblem& problem, const SearchOptions& opts = {});

}  // namespace extremal
