#include "doctest.h"

#include <random>

#include "extremal/exactmath.hpp"
#include "extremal/search.hpp"

using namespace extremal;

namespace {

SubsetMask S(int n, std::vector<int> elems) { return SubsetMask::from_elements(n, elems); }

// Independent oracle: scans every one of the 2^C(n,k) subfamilies via mask
// counting (usable up to C(n,k) <= 20) and keeps the best qualifying size.
std::uint64_t brute_force_max(int n, int k, int r, int t, bool nontrivial) {
  auto all = enumerate_ksubsets(n, k);
  REQUIRE(all.size() <= 20);
  const std::uint64_t total = std::uint64_t{1} << all.size();
  std::uint64_t best = 0;
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    std::vector<SubsetMask> members;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((pick >> i) & 1) members.push_back(all[i]);
    if (members.empty()) continue;
    SetFamily f = SetFamily::of(n, std::move(members), k);
    if (!is_rwise_t_intersecting(f, {r, t})) continue;
    if (nontrivial && !is_nontrivial(f, t)) continue;
    best = std::max<std::uint64_t>(best, f.size());
  }
  return best;
}

}  // namespace

TEST_CASE("solve_g on the pinned examples") {
  SearchOutcome a = solve_g(5, 2, 3, 1);
  CHECK(a.optimum == 4);
  CHECK(a.exact);
  CHECK(is_rwise_t_intersecting(a.witness, {3, 1}));
  CHECK(ExactInt(a.witness.size()) == a.optimum);

  SearchOutcome b = solve_g(7, 3, 3, 1);
  CHECK(b.optimum == binom(6, 2));

  CHECK(solve_g(7, 3, 2, 3).optimum == 1);   // t=k forces a single set
  CHECK(solve_g(6, 2, 2, 3).optimum == 0);   // k < t: nothing qualifies
}

TEST_CASE("solve_g independent brute-force oracle, tiny grid") {
  CHECK(brute_force_max(5, 2, 3, 1, false) == 4);
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int r = 2; r <= 3; ++r)
        for (int t = 1; t <= 2; ++t) {
          CHECK(solve_g(n, k, r, t).optimum == brute_force_max(n, k, r, t, false));
          CHECK(solve_h(n, k, r, t).optimum == brute_force_max(n, k, r, t, true));
        }
}

TEST_CASE("solve_h on the pinned examples") {
  SearchOutcome a = solve_h(6, 3, 3, 1);
  CHECK(a.optimum == 4);
  CHECK(a.optimum == std::max(size_A(6, 3, 4), size_B(6, 3, 4)));
  CHECK(is_nontrivial(a.witness, 1));

  SearchOutcome b = solve_h(7, 3, 3, 1);
  CHECK(b.optimum == 4);

  // k = t+1: no non-trivial family exists at all.
  SearchOutcome c = solve_h(8, 3, 3, 2);
  CHECK(c.optimum == 0);
  CHECK(c.witness.empty());
  CHECK_FALSE(c.note.empty());
}

TEST_CASE("exhaustive proof mode returns the lex-minimal witness") {
  SearchOptions full;
  full.exhaustive = true;
  SearchOutcome got = solve_g(5, 2, 2, 1, full);
  CHECK(got.optimum == 4);
  CHECK(got.witness_lex_minimal);
  CHECK(got.proof == ProofKind::exhaustive);
  // The lex-first maximum intersecting family of 2-sets in [5] is the star
  // at 1 (size 4); triangles only reach 3.
  CHECK(got.witness == build_star(5, 2, S(5, {1})));

  SearchOutcome h = solve_h(5, 3, 2, 1, full);
  CHECK(h.optimum == brute_force_max(5, 3, 2, 1, true));
  CHECK(is_nontrivial(h.witness, 1));
}

TEST_CASE("assume-shifted agrees with the default proof mode") {
  for (auto [n, k, r, t] : std::vector<std::array<int, 4>>{
           {7, 3, 2, 1}, {8, 4, 2, 2}, {9, 4, 2, 1}, {7, 3, 3, 1}, {8, 4, 3, 2}}) {
    SearchOptions shifted;
    shifted.assume_shifted = true;
    SearchOutcome a = solve_g(n, k, r, t, shifted);
    SearchOutcome b = solve_g(n, k, r, t);
    CHECK(a.optimum == b.optimum);
    CHECK(a.exact);
    CHECK(is_rwise_t_intersecting(a.witness, {r, t}));
  }
}

TEST_CASE("assume-shifted for h is guarded by the n >= 2k-t window") {
  SearchOptions shifted;
  shifted.assume_shifted = true;
  CHECK_THROWS_AS(solve_h(4, 3, 3, 1, shifted), parameter_error);  // 4 < 2*3-1
  SearchOutcome ok = solve_h(6, 3, 3, 1, shifted);
  CHECK(ok.optimum == 4);
}

TEST_CASE("theorem 1.3 window: the 2-wise maximum is |A(n,k,t+2)|") {
  // t=2, k=4: (t+3)/2 (k-t+1) = 7.5 <= n <= 9.
  CHECK(solve_g(8, 4, 2, 2).optimum == size_A(8, 4, 4));
  CHECK(solve_g(9, 4, 2, 2).optimum == size_A(9, 4, 4));
  CHECK(size_A(8, 4, 4) == 17);  // beats the star C(6,2) = 15 below the EKR range
}

TEST_CASE("monotone chain h(n,k,t+1,1) <= ... <= h(n,k,2,t)") {
  // Non-trivial r-wise t-intersecting families stay non-trivial (r-1)-wise
  // (t+1)-intersecting, so the h-values grow along the chain.
  for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 4}, {9, 4}}) {
    for (int t = 2; t <= k - 1; ++t) {
      ExactInt prev = solve_h(n, k, t + 1, 1).optimum;
      for (int j = 2; j <= t; ++j) {
        ExactInt cur = solve_h(n, k, t + 2 - j, j).optimum;
        CHECK(prev <= cur);
        prev = cur;
      }
    }
  }
}

TEST_CASE("the same chain fails for g: trivial families break the step") {
  // The full star is (t+1)-wise 1-intersecting but not t-wise 2-intersecting,
  // so the unrestricted maxima are not monotone along the chain.
  ExactInt g1 = solve_g(7, 3, 3, 1).optimum;
  ExactInt g2 = solve_g(7, 3, 2, 2).optimum;
  CHECK(g1 == 15);
  CHECK(g2 == 5);
  CHECK(g1 > g2);
}

TEST_CASE("corollary 1.5(ii) equalities at desk scale") {
  // n >= (t+r-1)(k-t-r+3): r=3, t=1, k=3 gives n >= 6.
  for (int n = 6; n <= 8; ++n) {
    CHECK(solve_g(n, 3, 3, 1).optimum == binom(n - 1, 2));
    CHECK(solve_h(n, 3, 3, 1).optimum == std::max(size_A(n, 3, 4), size_B(n, 3, 4)));
  }
}

TEST_CASE("node budget produces flagged partial results") {
  SearchOptions tiny;
  tiny.node_budget = 5;
  SearchOutcome out = solve_g(8, 3, 2, 1, tiny);
  CHECK_FALSE(out.exact);
  CHECK(out.optimum >= binom(7, 2));  // the seeded star survives
  CHECK(out.upper_bound >= out.optimum);
  CHECK_FALSE(out.note.empty());
}

TEST_CASE("optimum is independent of the thread count") {
  for (int threads : {1, 2, 3}) {
    SearchOptions opts;
    opts.threads = threads;
    CHECK(solve_g(7, 3, 2, 1, opts).optimum == binom(6, 2));
    CHECK(solve_h(7, 3, 3, 1, opts).optimum == 4);
  }
}

TEST_CASE("solve_cross_sum on the pinned examples") {
  SearchOutcome a = solve_cross_sum(4, 2, 3, 1);
  CHECK(a.optimum == 9);
  REQUIRE(a.witnesses.size() == 3);
  CHECK(are_cross_t_intersecting(a.witnesses, 1));
  ExactInt total = 0;
  for (const SetFamily& f : a.witnesses) total += f.size();
  CHECK(total == a.optimum);

  CHECK_THROWS_AS(solve_cross_sum(4, 2, 1, 1), parameter_error);

  SearchOutcome b = solve_cross_sum(5, 2, 2, 1);
  CHECK(b.optimum == binom(5, 2));  // Hilton, m < n/k branch
}

TEST_CASE("solve_g_nonuniform boundary cases") {
  SearchOutcome one = solve_g_nonuniform(3, 2, 3);
  CHECK(one.optimum == 1);  // only [3] itself qualifies
  SearchOutcome katona = solve_g_nonuniform(5, 2, 1);
  CHECK(katona.optimum == 16);  // 2^(n-1)
  SearchOutcome empty = solve_g_nonuniform(3, 2, 4);
  CHECK(empty.optimum == 0);
}

TEST_CASE("witness files and sizes stay consistent under solve()") {
  SearchProblem p;
  p.n = 6;
  p.k = 3;
  p.spec = {3, 1};
  p.mode = SearchMode::h;
  SearchOutcome out = solve(p);
  CHECK(out.optimum == 4);
  CHECK(ExactInt(out.witness.size()) == out.optimum);
}
