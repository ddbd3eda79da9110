#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "extremal/exactmath.hpp"
#include "extremal/family.hpp"
#include "extremal/report.hpp"
#include "extremal/search.hpp"

namespace extremal {

/// Result of instantiating one structural claim on concrete data. On fail the
/// certificate holds the violating tuple so the verdict can be replayed.
struct LemmaInstance {
  std::string lemma_id;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
  nlohmann::json certificate = nlohmann::json();
  std::string detail;

  VerdictReport to_report() const;
};

/// Quotient intersection bound for shifted r-wise t-intersecting families:
/// for A_i in [s] with |A_1 cap ... cap A_r| < t and B_i in F(A_i,[s]),
///   |B_1 cap ... cap B_r| >= (r-1)s + t - sum |A_i|.
/// Exhausts all B-tuples up to an internal cap, then samples `trials` tuples.
LemmaInstance verify_lemma_2_9(const SetFamily& f, int s, int r, int t,
                               std::uint64_t trials = 10000, std::uint64_t seed = 1);

enum class FranklVariant { first, second };

/// Designated-set size bounds for shifted families: if the variant's
/// designated set is absent, |F| is bounded by the matching entry of
/// frankl_bound_values; if it is present the claim does not apply.
LemmaInstance verify_prop_2_3(const SetFamily& f, int p, FranklVariant variant);

/// Universal bound for 2-wise t-intersecting families: |F| <= C(n,k-t)
/// whenever n > 2k-t. Hypothesis failure reports not-applicable.
LemmaInstance verify_lemma_2_4(const SetFamily& f, int t);

/// Slice-level intersection strength of shifted non-trivial 3-wise
/// t-intersecting families; evaluates every clause on the concrete slices.
LemmaInstance verify_lemma_3_1(const SetFamily& f, int t);

/// Cross-intersection strength between the [t+1]-trace slice and the others.
LemmaInstance verify_lemma_3_2(const SetFamily& f, int t);

/// Kneser-type bound |P| + beta|R| over all cross-intersecting pairs
/// P in C(X,s), R in C(X,s+1) with |P| >= C(m-1,s-1)+C(m-2,s-1).
LemmaInstance verify_prop_4_3(int m, int s, const ExactRatio& beta);

/// Exact non-uniform maximum versus the best B_s(n,r,t) construction.
VerdictReport conjecture_6_2_evidence(int n, int r, int t, const SearchOptions& opts = {});

}  // namespace extremal
