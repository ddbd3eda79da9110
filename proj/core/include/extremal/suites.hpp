#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extremal/report.hpp"
#include "extremal/family.hpp"

namespace extremal {

struct SweepOptions {
  int threads = 1;
  std::uint64_t seed = 2026;
  std::uint64_t node_budget = 0;
};

/// Uniformly random k-uniform family on [n] with about `target_size` members.
SetFamily random_family(std::mt19937_64& rng, int n, int k, std::size_t target_size);

// Acceptance suites. Each returns one VerdictReport per checked block; the
// sweep passes iff worst_verdict(...) == pass.

/// |build_A| = size_A and |build_B| = size_B for all n <= n_max, k < n, valid s.
std::vector<VerdictReport> sweep_formulas(int n_max = 12, const SweepOptions& opts = {});

/// Sign of size_A(n,k,t+3) - C(n-t,k-t) against compare_n_to_n0 for
/// k <= k_max, t <= k-3, n in [k+1, 3k].
std::vector<VerdictReport> sweep_eq_1_0(int k_max = 40, const SweepOptions& opts = {});

/// Sign of size_A(n,k,t+2) - C(n-t,k-t) against (t+1)(k-t+1) - n.
std::vector<VerdictReport> sweep_eq_1_2(int k_max = 30, const SweepOptions& opts = {});

/// verify_mathematica_claim over k in [k_lo,k_hi], t in [46, k-3].
std::vector<VerdictReport> sweep_mathematica(int k_lo = 667, int k_hi = 700,
                                             const SweepOptions& opts = {});

/// verify_corollary_bound over t in [t_lo,t_hi], k in (t, k_max].
std::vector<VerdictReport> sweep_corollary(int k_max = 200, int t_lo = 46, int t_hi = 60,
                                           const SweepOptions& opts = {});

/// The whole threshold block: eq-1.0, eq-1.2, mathematica claim, corollary.
std::vector<VerdictReport> sweep_thresholds(const SweepOptions& opts = {});

/// solve_g(n,k,2,t) = C(n-t,k-t) on the Exact-EKR desk grid, shifted proof
/// mode cross-checked against the default mode on the n <= 10 subgrid.
std::vector<VerdictReport> sweep_thm_1_2(const SweepOptions& opts = {});

/// solve_h(n,3,3,1) = max(size_A, size_B) for n in {6,7,8}.
std::vector<VerdictReport> sweep_thm_1_6(const SweepOptions& opts = {});

/// Branch-and-bound equals full enumeration for n <= 6, k <= 3, r <= 4,
/// t <= 3, both g and h.
std::vector<VerdictReport> sweep_oracle_equivalence(const SweepOptions& opts = {});

/// solve_cross_sum against the cross-intersecting sum bounds on the four
/// pinned instances.
std::vector<VerdictReport> sweep_cross_sums(const SweepOptions& opts = {});

/// All search acceptance blocks together.
std::vector<VerdictReport> sweep_search_small(const SweepOptions& opts = {});

/// Seeded random families: size/property preservation under shifts, fixpoint
/// shiftedness and down-closure, log replay.
std::vector<VerdictReport> sweep_shifting(int families = 1000, const SweepOptions& opts = {});

/// Structural-lemma sweeps (quotient bound, designated-set bounds, universal
/// 2-wise bound, slice lemmas, Kneser pair bound, inequality (3.0)).
std::vector<VerdictReport> sweep_lemmas(const SweepOptions& opts = {});

/// Non-uniform maximum versus best B_s for n <= n_max, r in {2,3}, t <= 3.
std::vector<VerdictReport> sweep_conjecture_6_2(int n_max = 10, const SweepOptions& opts = {});

}  // namespace extremal
