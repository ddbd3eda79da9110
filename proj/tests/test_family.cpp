#include "doctest.h"

#include <random>

#include <nlohmann/json.hpp>

#include "extremal/exactmath.hpp"
#include "extremal/family.hpp"

using namespace extremal;

namespace {

SubsetMask S(int n, std::vector<int> elems) { return SubsetMask::from_elements(n, elems); }

SetFamily F(int n, std::vector<std::vector<int>> members) {
  std::vector<SubsetMask> ms;
  for (auto& m : members) ms.push_back(S(n, m));
  return SetFamily::of(n, std::move(ms));
}

// Set-builder oracles, written directly from the defining conditions on
// element lists so they do not share the builders' mask arithmetic.
bool oracle_in_A(const SubsetMask& m, int s) {
  int hits = 0;
  for (int e : m.elements())
    if (e <= s) ++hits;
  return hits >= s - 1;
}

bool oracle_in_B_block1(const SubsetMask& m, int s, int k) {
  for (int e = 1; e <= s - 2; ++e)
    if (!m.contains(e)) return false;
  for (int e = s - 1; e <= k + 1; ++e)
    if (m.contains(e)) return true;
  return false;
}

SetFamily oracle_A(int n, int k, int s) {
  std::vector<SubsetMask> out;
  for (const SubsetMask& m : enumerate_ksubsets(n, k))
    if (oracle_in_A(m, s)) out.push_back(m);
  return SetFamily::of(n, std::move(out), k);
}

SetFamily oracle_B(int n, int k, int s) {
  std::vector<SubsetMask> out;
  for (const SubsetMask& m : enumerate_ksubsets(n, k))
    if (oracle_in_B_block1(m, s, k)) out.push_back(m);
  for (int j = 1; j <= s - 2; ++j) {
    std::vector<int> elems;
    for (int e = 1; e <= k + 1; ++e)
      if (e != j) elems.push_back(e);
    out.push_back(S(n, elems));
  }
  return SetFamily::of(n, std::move(out), k);
}

// Literal r-tuple check with repetition, for cross-validating the
// distinct-subset reduction used by is_rwise_t_intersecting.
bool rwise_all_tuples(const SetFamily& f, int r, int t) {
  if (f.empty()) return true;
  std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
  while (true) {
    SubsetMask inter = f.member(pick[0]);
    for (int i = 1; i < r; ++i) inter = inter & f.member(pick[static_cast<std::size_t>(i)]);
    if (inter.cardinality() < t) return false;
    int i = r - 1;
    while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == f.size()) pick[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return true;
  }
}

}  // namespace

TEST_CASE("build_star examples") {
  CHECK(build_star(6, 3, S(6, {1})).size() == 10);
  SetFamily single = build_star(5, 5, S(5, {1, 2}));
  REQUIRE(single.size() == 1);
  CHECK(single.member(0) == SubsetMask::full(5));
  CHECK(build_star(10, 5, S(10, {1, 2})).size() == 56);
  CHECK_THROWS_AS(build_star(6, 2, S(6, {1, 2, 3})), parameter_error);
}

TEST_CASE("build_A examples and degenerate s=1") {
  CHECK(build_A(10, 5, 5).size() == 26);
  SetFamily a = build_A(6, 3, 4);
  CHECK(a == F(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  CHECK(build_A(7, 3, 1).size() == binom64(7, 3));
  CHECK_THROWS_AS(build_A(6, 2, 4), parameter_error);
}

TEST_CASE("build_B examples") {
  CHECK(build_B(10, 5, 5).size() == 18);
  CHECK(build_B(6, 3, 4) == F(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  CHECK(build_B(7, 4, 4).size() == 11);
  CHECK_THROWS_AS(build_B(6, 3, 5), parameter_error);
  CHECK_THROWS_AS(build_B(5, 5, 3), parameter_error);
}

TEST_CASE("builders match the set-builder oracles member-for-member, n <= 12") {
  for (int n = 3; n <= 12; ++n)
    for (int k = 1; k < n; ++k)
      for (int s = 1; s <= k + 1; ++s) {
        CHECK(build_A(n, k, s) == oracle_A(n, k, s));
        if (s >= 2) CHECK(build_B(n, k, s) == oracle_B(n, k, s));
      }
}

TEST_CASE("build_Bs examples") {
  SetFamily b0 = build_Bs(6, 3, 2, 0);
  CHECK(b0.size() == 16);  // all 2^(6-2) supersets of [2]
  for (const SubsetMask& m : b0.members()) CHECK(S(6, {1, 2}).subset_of(m));
  CHECK(build_Bs(6, 3, 1, 1).size() == 20);
  CHECK(build_Bs_uniform(6, 3, 3, 1, 1) == build_A(6, 3, 4));
  CHECK_THROWS_AS(build_Bs(4, 3, 2, 1), parameter_error);
}

TEST_CASE("A(n,k,r+t) equals the uniform B_1(n,r,t)") {
  for (int n = 5; n <= 9; ++n)
    for (int r = 2; r <= 4; ++r)
      for (int t = 1; t <= 2; ++t) {
        const int k = t + r - 1 + (n % 2);
        if (k >= n || n < t + r) continue;
        CHECK(build_Bs_uniform(n, k, r, t, 1) == build_A(n, k, t + r));
      }
}

TEST_CASE("build_lex examples") {
  CHECK(build_lex(4, 2, 3) == F(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(build_lex(6, 3, 0).empty());
  CHECK(build_lex(6, 3, 0).uniform_k() == 3);
  CHECK(build_lex(5, 3, binom64(4, 2)) == build_star(5, 3, S(5, {1})));
  CHECK_THROWS_AS(build_lex(4, 2, 7), parameter_error);
}

TEST_CASE("is_rwise_t_intersecting examples") {
  CHECK(is_rwise_t_intersecting(F(6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}), {3, 2}));
  CHECK_FALSE(is_rwise_t_intersecting(F(3, {{1, 2}, {1, 3}, {2, 3}}), {3, 1}));
  CHECK(is_rwise_t_intersecting(build_A(10, 5, 5), {3, 2}));
  CHECK(is_rwise_t_intersecting(SetFamily(5), {2, 1}));  // vacuous
  CHECK(is_rwise_t_intersecting(F(5, {{1, 2}}), {4, 2}));
  CHECK_FALSE(is_rwise_t_intersecting(F(5, {{1, 2}}), {4, 3}));  // singleton needs |F| >= t
  CHECK_THROWS_AS(is_rwise_t_intersecting(SetFamily(5), {1, 1}), parameter_error);
}

TEST_CASE("distinct-subset reduction equals the literal tuple check") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 2);
    auto all = enumerate_ksubsets(n, k);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), 1 + rng() % 10));
    SetFamily f = SetFamily::of(n, std::move(all), k);
    for (int r = 2; r <= 4; ++r)
      for (int t = 1; t <= 3; ++t)
        CHECK(is_rwise_t_intersecting(f, {r, t}) == rwise_all_tuples(f, r, t));
  }
}

TEST_CASE("is_nontrivial examples") {
  CHECK_FALSE(is_nontrivial(build_star(6, 3, S(6, {1, 2})), 2));
  CHECK(is_nontrivial(build_A(6, 3, 4), 1));
  CHECK_FALSE(is_nontrivial(F(5, {{1, 2, 3}}), 3));
  CHECK_THROWS_AS(is_nontrivial(SetFamily(5), 1), parameter_error);
}

TEST_CASE("are_cross_t_intersecting examples") {
  SetFamily star = build_star(5, 2, S(5, {1}));
  CHECK(are_cross_t_intersecting({star, star}, 1));
  CHECK_FALSE(are_cross_t_intersecting({F(5, {{1, 2}}), F(5, {{3, 4}})}, 1));
  CHECK_THROWS_AS(are_cross_t_intersecting({star}, 1), parameter_error);
  // Full pairwise scan oracle on a lex pair.
  SetFamily a = build_lex(5, 2, 4), b = build_lex(5, 3, 3);
  bool expected = true;
  for (const SubsetMask& x : a.members())
    for (const SubsetMask& y : b.members())
      if ((x & y).cardinality() < 1) expected = false;
  CHECK(are_cross_t_intersecting({a, b}, 1) == expected);
}

TEST_CASE("is_exactly_2wise_t examples") {
  CHECK(is_exactly_2wise_t(F(6, {{1, 2, 3}, {1, 2, 4}}), 2));
  CHECK_FALSE(is_exactly_2wise_t(F(6, {{1, 2, 3}, {1, 2, 4}}), 1));
  CHECK(is_exactly_2wise_t(build_star(6, 3, S(6, {1, 2})), 2));
  CHECK(is_exactly_2wise_t(F(6, {{1, 2}}), 2));        // singleton of size t
  CHECK_FALSE(is_exactly_2wise_t(F(6, {{1, 2, 3}}), 2));
}

TEST_CASE("quotient examples") {
  SetFamily q = quotient(build_star(5, 2, S(5, {1})), S(5, {1}));
  CHECK(q == F(5, {{2}, {3}, {4}, {5}}));
  CHECK(quotient(F(5, {{1, 2, 3}}), S(5, {1}), S(5, {1, 2})).empty());
  CHECK(quotient(build_A(6, 3, 4), S(6, {1, 2}), S(6, {1, 2, 3, 4})).empty());
  CHECK_THROWS_AS(quotient(build_A(6, 3, 4), S(6, {5}), S(6, {1, 2})), parameter_error);
  // Residual of a fully contained member is the empty set.
  SetFamily stripped = quotient(F(6, {{1, 2}}), S(6, {1, 2}));
  REQUIRE(stripped.size() == 1);
  CHECK(stripped.member(0).empty());
}

TEST_CASE("slices of A(6,3,4) at t=1") {
  SetFamily a = build_A(6, 3, 4);
  CHECK(slice(a, 1, 1) == a);
  CHECK(slice(a, 1, 0).empty());
  auto sizes = family_union_decomposition(a, 1);
  REQUIRE(sizes.size() == 5);
  CHECK(sizes[0].empty());
  CHECK(sizes[1].size() == 4);
  CHECK(sizes[2].empty());
  CHECK(sizes[3].empty());
  CHECK(sizes[4].empty());
}

TEST_CASE("tilde_slice keeps residuals beyond [t+3]") {
  SetFamily a = build_A(6, 3, 4);
  SetFamily res = tilde_slice(a, 1, 1, S(6, {1, 2, 3}));
  REQUIRE(res.size() == 1);
  CHECK(res.member(0).empty());
  SetFamily star = build_star(7, 4, S(7, {1, 2}));
  SetFamily two = slice(star, 1, 2);
  CHECK(two.size() == 3);  // {1,2} plus two elements of [5,7]
  SetFamily resid = tilde_slice(star, 1, 2, S(7, {1, 2}));
  CHECK(resid.size() == 3);
  for (const SubsetMask& m : resid.members()) CHECK((m.bits() & prefix_bits(7, 4)) == 0);
  CHECK_THROWS_AS(tilde_slice(star, 1, 2, S(7, {1, 2, 3})), parameter_error);
}

TEST_CASE("slices partition any family") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    if (k >= n) continue;
    auto all = enumerate_ksubsets(n, k);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(1 + rng() % std::min<std::size_t>(all.size(), 25));
    SetFamily f = SetFamily::of(n, std::move(all), k);
    const int t = 1 + static_cast<int>(rng() % 3);
    if (n < t + 3) continue;
    auto slices = family_union_decomposition(f, t);
    std::size_t total = 0;
    std::vector<SubsetMask> joined;
    for (const SetFamily& s : slices) {
      total += s.size();
      for (const SubsetMask& m : s.members()) joined.push_back(m);
    }
    CHECK(total == f.size());
    CHECK(SetFamily::of(n, std::move(joined), k) == f);
  }
}

TEST_CASE("Fact 1.4: non-trivial r-wise t implies (r-1)-wise (t+1)") {
  std::mt19937_64 rng(41);
  int observed = 0;
  for (int trial = 0; trial < 4000 && observed < 150; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const int k = 3 + static_cast<int>(rng() % 2);
    if (k >= n) continue;
    auto all = enumerate_ksubsets(n, k);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), 1 + rng() % 8));
    SetFamily f = SetFamily::of(n, std::move(all), k);
    for (int r = 3; r <= 4; ++r)
      for (int t = 1; t <= 2; ++t)
        if (is_rwise_t_intersecting(f, {r, t}) && is_nontrivial(f, t)) {
          ++observed;
          CHECK(is_rwise_t_intersecting(f, {r - 1, t + 1}));
        }
  }
  CHECK(observed > 0);
}

TEST_CASE("constructed families satisfy their intersection contracts") {
  for (int n = 5; n <= 10; ++n)
    for (int r = 2; r <= 4; ++r)
      for (int t = 1; t <= 2; ++t) {
        const int s = t + r;
        for (int k = s - 1; k < n; ++k) {
          SetFamily a = build_A(n, k, s);
          CHECK(is_rwise_t_intersecting(a, {r, t}));
          if (!a.empty()) CHECK(is_nontrivial(a, t));
          if (s <= k + 1) {
            SetFamily b = build_B(n, k, s);
            CHECK(is_rwise_t_intersecting(b, {r, t}));
            CHECK(is_nontrivial(b, t));
          }
        }
      }
}

TEST_CASE("Hilton compression preserves cross-intersection") {
  std::mt19937_64 rng(51);
  int observed = 0;
  for (int trial = 0; trial < 3000 && observed < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);  // 5..8
    const int a = 2 + static_cast<int>(rng() % 2);
    const int b = 2 + static_cast<int>(rng() % 2);
    if (a + b > n) continue;
    auto all_a = enumerate_ksubsets(n, a);
    auto all_b = enumerate_ksubsets(n, b);
    std::shuffle(all_a.begin(), all_a.end(), rng);
    std::shuffle(all_b.begin(), all_b.end(), rng);
    all_a.resize(1 + rng() % std::min<std::size_t>(all_a.size(), 12));
    all_b.resize(1 + rng() % std::min<std::size_t>(all_b.size(), 12));
    SetFamily fa = SetFamily::of(n, std::move(all_a), a);
    SetFamily fb = SetFamily::of(n, std::move(all_b), b);
    if (!are_cross_t_intersecting({fa, fb}, 1)) continue;
    ++observed;
    SetFamily la = build_lex(n, a, fa.size());
    SetFamily lb = build_lex(n, b, fb.size());
    CHECK(are_cross_t_intersecting({la, lb}, 1));
  }
  CHECK(observed > 0);
}

TEST_CASE("family text format round-trips") {
  SetFamily f = build_B(7, 4, 4);
  const std::string text = to_family_text(f);
  CHECK(text.substr(0, 8) == "n=7 k=4\n");
  CHECK(from_family_text(text) == f);
  SetFamily mixed = build_Bs(5, 2, 1, 1);
  const std::string mtext = to_family_text(mixed);
  CHECK(mtext.find("k=mixed") != std::string::npos);
  CHECK(from_family_text(mtext) == mixed);
}

TEST_CASE("family JSON round-trips") {
  SetFamily f = build_A(8, 4, 4);
  nlohmann::json j = to_family_json(f);
  CHECK(j["n"] == 8);
  CHECK(j["k"] == 4);
  CHECK(from_family_json(j) == f);
}

TEST_CASE("SetFamily invariants") {
  CHECK_THROWS_AS(SetFamily::of(5, {S(5, {1, 2}), S(4, {1, 2})}), parameter_error);
  CHECK_THROWS_AS(SetFamily::of(5, {S(5, {1, 2})}, 3), parameter_error);
  SetFamily deduped = SetFamily::of(5, {S(5, {1, 2}), S(5, {1, 2})});
  CHECK(deduped.size() == 1);
  SetFamily f = build_lex(5, 2, 4);
  CHECK(f.contains(S(5, {1, 2})));
  CHECK_FALSE(f.contains(S(5, {4, 5})));
}

TEST_CASE("apply_permutation relabels members") {
  SetFamily f = F(4, {{1, 2}, {3, 4}});
  SetFamily g = apply_permutation(f, {2, 1, 4, 3});
  CHECK(g == F(4, {{1, 2}, {3, 4}}));
  SetFamily h = apply_permutation(f, {3, 2, 1, 4});
  CHECK(h == F(4, {{2, 3}, {1, 4}}));
  CHECK_THROWS_AS(apply_permutation(f, {1, 1, 2, 3}), parameter_error);
}
