#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "extremal/errors.hpp"
#include "extremal/subset.hpp"

namespace extremal {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 when k < 0 or k > n.
ExactInt binom(long long n, long long k);

/// |A(n,k,s)| = s*C(n-s,k-s+1) + C(n-s,k-s). Preconditions as in build_A.
ExactInt size_A(long long n, long long k, long long s);

/// |B(n,k,s)| = C(n-s+2,k-s+2) - C(n-k-1,k-s+2) + s - 2. As in build_B.
ExactInt size_B(long long n, long long k, long long s);

/// |B_s(n,r,t)| (non-uniform) and its k-uniform restriction, in closed form.
ExactInt size_Bs(long long n, long long r, long long t, long long s);
ExactInt size_Bs_uniform(long long n, long long k, long long r, long long t, long long s);

// ---------------------------------------------------------------------------
// Exact comparison of radical expressions (isolate-and-square, sign-tracked;
// no floating point anywhere).
// ---------------------------------------------------------------------------

/// Sign of p + q*sqrt(d) for rationals p,q and d >= 0. Returns -1, 0, or +1.
int sign_linear_radical(const ExactRatio& p, const ExactRatio& q, const ExactRatio& d);

/// Sign of sqrt(R) - (a + b*sqrt(d)) for R >= 0, d >= 0.
int compare_sqrt_vs_linear(const ExactRatio& R, const ExactRatio& a, const ExactRatio& b,
                           const ExactRatio& d);

/// Sign of (a + b*sqrt(d)) - (c + f*sqrt(g)) for d,g >= 0.
int compare_linear_linear(const ExactRatio& a, const ExactRatio& b, const ExactRatio& d,
                          const ExactRatio& c, const ExactRatio& f, const ExactRatio& g);

// ---------------------------------------------------------------------------
// The n0(k,t) threshold
// ---------------------------------------------------------------------------

/// (4t+9)k^2 - 2(4t^2+11t+3)k + 4t^3+13t^2+6t+1, the quantity under the
/// radical of n0(k,t). Positive for all integer k >= 1, t >= 1.
ExactInt n0_radicand(long long k, long long t);

/// Exact position of n relative to n0(k,t) = (sqrt(radicand) - k + 3(t+1))/2.
/// Requires k > t >= 1. The radicand is asserted nonnegative.
Ordering compare_n_to_n0(long long n, long long k, long long t);

/// Parameters of one threshold comparison; n > k > t >= 1.
struct ThresholdQuery {
  long long n;
  long long k;
  long long t;

  ThresholdQuery(long long n_, long long k_, long long t_);
  ExactInt radicand() const { return n0_radicand(k, t); }
};

/// Decimal rendering of n0(k,t), for display only (value is irrational in
/// general; comparisons always go through compare_n_to_n0).
std::string n0_approx_decimal(long long k, long long t, int digits = 6);

/// Smallest n with |A(n,k,t+3)| <= C(n-t,k-t), found by exact upward scan
/// from n = k+1; certifies the opposite sign below the crossover.
long long eq1_0_crossover(long long k, long long t);

/// Exact truth of n0(k,t) >= sqrt((t+3)/1.654)(k-t) + k with 1.654 = 827/500.
bool verify_mathematica_claim(long long k, long long t);

/// Exact truth of sqrt((t+3)/1.654)(k-t) + k <= ((sqrt(4t+9)-1)/2) k.
bool verify_corollary_bound(long long k, long long t);

// ---------------------------------------------------------------------------
// Inequality (3.0) and the shifted-family bounds
// ---------------------------------------------------------------------------

enum class RatioVerdict { pass, conclusion_fail, hypothesis_fail };

/// Checks C(n-t-3,k-t-l-1) <= alpha*C(n-t-3,k-t-l) under the hypothesis
/// 0 < alpha < 1 and 1 <= l < k-t <= alpha(n-k), all tested exactly.
/// A conclusion_fail under a satisfied hypothesis certifies a bug.
RatioVerdict ratio_lemma_check(long long n, long long k, long long t, long long l,
                               const ExactRatio& alpha);

struct FranklBounds {
  ExactInt first;                 // C(n, k-p-1), valid for 0 <= p <= k-1
  std::optional<ExactInt> second; // C(n,k)-C(n-p+2,k)+C(n-p+2,k-1), for 2 <= p <= k-1
};

/// Right-hand sides of the two designated-set size bounds for shifted families.
FranklBounds frankl_bound_values(long long n, long long k, long long p);

}  // namespace extremal
