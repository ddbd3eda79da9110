#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "extremal/subset.hpp"

using namespace extremal;

namespace {

SubsetMask S(int n, std::vector<int> elems) { return SubsetMask::from_elements(n, elems); }

// Independent Pascal-triangle oracle.
std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  static std::map<std::pair<int, int>, std::uint64_t> memo;
  if (k == 0 || k == n) return 1;
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::uint64_t v = pascal(n - 1, k - 1) + pascal(n - 1, k);
  memo[key] = v;
  return v;
}

}  // namespace

TEST_CASE("lex_compare on the pinned examples") {
  CHECK(lex_compare(S(5, {1, 2}), S(5, {1, 3})) == Ordering::less);
  CHECK(lex_compare(S(5, {1, 4}), S(5, {2, 3})) == Ordering::less);
  CHECK(lex_compare(S(5, {2, 3}), S(5, {2, 3})) == Ordering::equal);
  CHECK(lex_compare(S(5, {2, 3}), S(5, {1, 4})) == Ordering::greater);
}

TEST_CASE("lex_compare rejects mismatched inputs") {
  CHECK_THROWS_AS(lex_compare(S(5, {1, 2}), S(6, {1, 2})), parameter_error);
  CHECK_THROWS_AS(lex_compare(S(5, {1, 2}), S(5, {1, 2, 3})), parameter_error);
  CHECK_THROWS_AS(shift_precedes(S(5, {1, 2}), S(5, {1})), parameter_error);
}

TEST_CASE("shift_precedes on the pinned examples") {
  CHECK(shift_precedes(S(4, {1, 3}), S(4, {2, 3})));
  CHECK_FALSE(shift_precedes(S(4, {1, 4}), S(4, {2, 3})));
  CHECK(shift_precedes(S(5, {2, 5}), S(5, {2, 5})));
}

TEST_CASE("shift_precedes is a partial order (exhaustive n <= 8)") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= 4 && k <= n; ++k) {
      auto all = enumerate_ksubsets(n, k);
      for (const auto& a : all) {
        CHECK(shift_precedes(a, a));
        for (const auto& b : all) {
          if (shift_precedes(a, b) && shift_precedes(b, a)) CHECK(a == b);
          for (const auto& c : all)
            if (shift_precedes(a, b) && shift_precedes(b, c)) CHECK(shift_precedes(a, c));
        }
      }
    }
  }
}

TEST_CASE("enumerate_ksubsets(4,2) lists the lex order") {
  auto got = enumerate_ksubsets(4, 2);
  std::vector<SubsetMask> expected = {S(4, {1, 2}), S(4, {1, 3}), S(4, {1, 4}),
                                      S(4, {2, 3}), S(4, {2, 4}), S(4, {3, 4})};
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("enumerate_ksubsets boundaries") {
  auto empty_k = enumerate_ksubsets(5, 0);
  REQUIRE(empty_k.size() == 1);
  CHECK(empty_k[0].empty());
  CHECK(enumerate_ksubsets(5, 2).size() == pascal(5, 2));
  CHECK_THROWS_AS(enumerate_ksubsets(3, 4), parameter_error);
}

TEST_CASE("enumeration is strictly lex-increasing with the right count, n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto all = enumerate_ksubsets(n, k);
      CHECK(all.size() == pascal(n, k));
      for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(lex_compare(all[i - 1], all[i]) == Ordering::less);
    }
  }
}

TEST_CASE("binom64 agrees with Pascal") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom64(n, k) == pascal(n, k));
  CHECK(binom64(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("lex_compare agrees with elementwise LexKey comparison") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % n);
    auto all = enumerate_ksubsets(n, k);
    const SubsetMask a = all[rng() % all.size()];
    const SubsetMask b = all[rng() % all.size()];
    auto ka = a.elements(), kb = b.elements();
    Ordering expected = Ordering::equal;
    for (std::size_t i = 0; i < ka.size(); ++i) {
      if (ka[i] != kb[i]) {
        expected = ka[i] < kb[i] ? Ordering::less : Ordering::greater;
        break;
      }
    }
    CHECK(lex_compare(a, b) == expected);
  }
}

TEST_CASE("textual form round-trips") {
  CHECK(S(7, {1, 3, 7}).to_string() == "{1,3,7}");
  CHECK(SubsetMask(5).to_string() == "{}");
  CHECK(SubsetMask::parse(7, "{1,3,7}") == S(7, {1, 3, 7}));
  CHECK(SubsetMask::parse(7, "{}") == SubsetMask(7));
  CHECK(SubsetMask::parse(9, "{2, 4, 9}") == S(9, {2, 4, 9}));
  CHECK_THROWS_AS(SubsetMask::parse(4, "{5}"), parameter_error);
  CHECK_THROWS_AS(SubsetMask::parse(4, "1,2"), parameter_error);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<int> elems;
    for (int e = 1; e <= n; ++e)
      if (rng() & 1) elems.push_back(e);
    SubsetMask m = SubsetMask::from_elements(n, elems);
    CHECK(SubsetMask::parse(n, m.to_string()) == m);
    CHECK(m.elements() == elems);
  }
}

TEST_CASE("mask invariants") {
  CHECK_THROWS_AS(SubsetMask::from_bits(4, 0x30), parameter_error);
  CHECK_THROWS_AS(SubsetMask::from_elements(4, {0}), parameter_error);
  CHECK_THROWS_AS(SubsetMask(65), parameter_error);
  CHECK(SubsetMask::full(6).cardinality() == 6);
  CHECK(S(6, {2, 4}).complement() == S(6, {1, 3, 5, 6}));
  CHECK((S(6, {1, 2, 4}) & S(6, {2, 4, 5})) == S(6, {2, 4}));
  CHECK((S(6, {1, 2}) | S(6, {5})) == S(6, {1, 2, 5}));
  CHECK((S(6, {1, 2, 4}) - S(6, {2})) == S(6, {1, 4}));
}

TEST_CASE("storage order: prefixes first, lex within equal sizes") {
  CHECK(storage_less(S(5, {1, 2}), S(5, {1, 3})));
  CHECK(storage_less(S(5, {1}), S(5, {1, 2})));
  CHECK(storage_less(S(5, {1, 2}), S(5, {2})));
  CHECK_FALSE(storage_less(S(5, {2}), S(5, {2})));
}
