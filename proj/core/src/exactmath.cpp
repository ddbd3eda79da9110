#include "extremal/exactmath.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace extremal {

namespace {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

int sign_of(const ExactRatio& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

Ordering to_ordering(int sign) {
  if (sign < 0) return Ordering::less;
  if (sign > 0) return Ordering::greater;
  return Ordering::equal;
}

}  // namespace

ExactInt binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact: the partial product is C(n-k+i, i)
  }
  return result;
}

ExactInt size_A(long long n, long long k, long long s) {
  if (s < 1) throw parameter_error("size_A: s >= 1 required");
  if (!(n > k && k >= s - 1)) throw parameter_error("size_A: need n > k >= s-1");
  return ExactInt(s) * binom(n - s, k - s + 1) + binom(n - s, k - s);
}

ExactInt size_B(long long n, long long k, long long s) {
  if (s < 2) throw parameter_error("size_B: s >= 2 required");
  if (s > k + 1) throw parameter_error("size_B: s > k+1");
  if (n < k + 1) throw parameter_error("size_B: n >= k+1 required");
  return binom(n - s + 2, k - s + 2) - binom(n - k - 1, k - s + 2) + (s - 2);
}

ExactInt size_Bs(long long n, long long r, long long t, long long s) {
  if (r < 2 || t < 1 || s < 0) throw parameter_error("size_Bs: need r >= 2, t >= 1, s >= 0");
  if (n < t + r * s) throw parameter_error("size_Bs: n < t + r*s");
  const long long w = t + r * s;
  ExactInt missing_ways = 0;
  for (long long i = 0; i <= s; ++i) missing_ways += binom(w, i);
  ExactInt outside = ExactInt(1) << static_cast<unsigned>(n - w);
  return missing_ways * outside;
}

ExactInt size_Bs_uniform(long long n, long long k, long long r, long long t, long long s) {
  if (r < 2 || t < 1 || s < 0)
    throw parameter_error("size_Bs_uniform: need r >= 2, t >= 1, s >= 0");
  if (n < t + r * s) throw parameter_error("size_Bs_uniform: n < t + r*s");
  const long long w = t + r * s;
  ExactInt total = 0;
  for (long long i = 0; i <= s; ++i) total += binom(w, i) * binom(n - w, k - (w - i));
  return total;
}

// ---------------------------------------------------------------------------
// Radical comparisons
// ---------------------------------------------------------------------------

int sign_linear_radical(const ExactRatio& p, const ExactRatio& q, const ExactRatio& d) {
  if (d < 0) throw parameter_error("sign_linear_radical: negative radicand");
  if (q == 0 || d == 0) return sign_of(p);
  if (q < 0) return -sign_linear_radical(-p, -q, d);
  // q > 0, d > 0: q*sqrt(d) > 0.
  if (p >= 0) return 1;
  // Compare q^2 d against p^2.
  ExactRatio lhs = q * q * d, rhs = p * p;
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

int compare_sqrt_vs_linear(const ExactRatio& R, const ExactRatio& a, const ExactRatio& b,
                           const ExactRatio& d) {
  if (R < 0) throw parameter_error("compare_sqrt_vs_linear: negative radicand");
  int rhs_sign = sign_linear_radical(a, b, d);
  if (rhs_sign < 0) return 1;
  if (rhs_sign == 0) return R > 0 ? 1 : 0;
  // Both sides nonnegative: square. sqrt(R)^2 - (a+b sqrt d)^2
  //   = (R - a^2 - b^2 d) - 2ab sqrt(d).
  return sign_linear_radical(R - a * a - b * b * d, ExactRatio(-2) * a * b, d);
}

int compare_linear_linear(const ExactRatio& a, const ExactRatio& b, const ExactRatio& d,
                          const ExactRatio& c, const ExactRatio& f, const ExactRatio& g) {
  if (d < 0 || g < 0) throw parameter_error("compare_linear_linear: negative radicand");
  // (a - c) + b sqrt(d)  vs  f sqrt(g)
  const ExactRatio p = a - c;
  int s1 = sign_linear_radical(p, b, d);
  int s2 = (f == 0 || g == 0) ? 0 : sign_of(f);
  if (s1 == 0 && s2 == 0) return 0;
  if (s1 >= 0 && s2 <= 0) return 1;
  if (s1 <= 0 && s2 >= 0) return -1;
  // Same strict sign: compare squares, flipping when both negative.
  int square_cmp =
      sign_linear_radical(p * p + b * b * d - f * f * g, ExactRatio(2) * p * b, d);
  return s1 > 0 ? square_cmp : -square_cmp;
}

// ---------------------------------------------------------------------------
// n0 threshold
// ---------------------------------------------------------------------------

ExactInt n0_radicand(long long k, long long t) {
  ExactInt K = k, T = t;
  return (4 * T + 9) * K * K - 2 * (4 * T * T + 11 * T + 3) * K +
         (4 * T * T * T + 13 * T * T + 6 * T + 1);
}

Ordering compare_n_to_n0(long long n, long long k, long long t) {
  if (!(k > t && t >= 1)) throw parameter_error("compare_n_to_n0: need k > t >= 1");
  ExactInt R = n0_radicand(k, t);
  if (R < 0)
    throw internal_error("compare_n_to_n0: negative radicand for k=" + std::to_string(k) +
                         ", t=" + std::to_string(t));
  // n vs (sqrt(R) - k + 3(t+1))/2  <=>  2n + k - 3t - 3 vs sqrt(R).
  ExactInt L = 2 * ExactInt(n) + k - 3 * ExactInt(t) - 3;
  if (L < 0) return Ordering::less;
  ExactInt L2 = L * L;
  if (L2 < R) return Ordering::less;
  if (L2 > R) return Ordering::greater;
  return Ordering::equal;
}

ThresholdQuery::ThresholdQuery(long long n_, long long k_, long long t_) : n(n_), k(k_), t(t_) {
  if (!(k > t && t >= 1)) throw parameter_error("ThresholdQuery: need k > t >= 1");
  if (!(n > k)) throw parameter_error("ThresholdQuery: need n > k");
}

std::string n0_approx_decimal(long long k, long long t, int digits) {
  if (digits < 0 || digits > 50) throw parameter_error("n0_approx_decimal: digits in [0,50]");
  ExactInt R = n0_radicand(k, t);
  if (R < 0) throw internal_error("n0_approx_decimal: negative radicand");
  // Scale so that the floor square root carries `digits+1` decimals, then
  // round the final division to `digits`.
  ExactInt scale = 1;
  for (int i = 0; i < digits + 1; ++i) scale *= 10;
  const ExactInt scaled_radicand = R * scale * scale;
  ExactInt s = boost::multiprecision::sqrt(scaled_radicand);
  ExactInt numerator = s + (ExactInt(-k + 3 * (t + 1))) * scale;  // 2*n0 * scale
  // n0*10^digits, rounded to nearest.
  ExactInt scaled = (numerator + 10) / 20;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  if (digits == 0) return out + body;
  out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  out += ".";
  out += body.substr(body.size() - static_cast<std::size_t>(digits));
  return out;
}

long long eq1_0_crossover(long long k, long long t) {
  if (!(k >= t + 3 && t >= 1)) throw parameter_error("eq1_0_crossover: need k >= t+3, t >= 1");
  for (long long n = k + 1;; ++n) {
    ExactInt a = size_A(n, k, t + 3);
    ExactInt b = binom(n - t, k - t);
    if (a <= b) return n;
    if (n > k + 8 * k * k + 64)
      throw internal_error("eq1_0_crossover: scan failed to terminate");
  }
}

bool verify_mathematica_claim(long long k, long long t) {
  if (k < 1 || t < 1) throw parameter_error("verify_mathematica_claim: k,t >= 1");
  ExactInt R = n0_radicand(k, t);
  if (R < 0) throw internal_error("verify_mathematica_claim: negative radicand");
  // n0 >= sqrt((t+3)/theta)(k-t) + k with theta = 827/500
  //   <=>  sqrt(R) >= 2(k-t) sqrt(d) + (3k - 3t - 3),  d = 500(t+3)/827.
  ExactRatio d(500 * (ExactInt(t) + 3), 827);
  ExactRatio a = ExactRatio(3) * (ExactInt(k) - t - 1);
  ExactRatio b = ExactRatio(2) * (ExactInt(k) - t);
  return compare_sqrt_vs_linear(ExactRatio(R), a, b, d) >= 0;
}

bool verify_corollary_bound(long long k, long long t) {
  if (!(k > t && t >= 1)) throw parameter_error("verify_corollary_bound: need k > t >= 1");
  // sqrt(d)(k-t) + k  <=  (sqrt(4t+9)-1)/2 * k
  ExactRatio d(500 * (ExactInt(t) + 3), 827);
  ExactRatio g(4 * ExactInt(t) + 9);
  ExactRatio half_k = ExactRatio(ExactInt(k), 2);
  return compare_linear_linear(ExactRatio(k), ExactRatio(ExactInt(k) - t), d,
                               -half_k, half_k, g) <= 0;
}

// ---------------------------------------------------------------------------
// Inequality (3.0) and Frankl bounds
// ---------------------------------------------------------------------------

RatioVerdict ratio_lemma_check(long long n, long long k, long long t, long long l,
                               const ExactRatio& alpha) {
  // Hypothesis: 0 < alpha < 1, 1 <= l < k-t, and k-t <= alpha(n-k).
  if (!(alpha > 0 && alpha < 1)) return RatioVerdict::hypothesis_fail;
  if (!(1 <= l && l < k - t)) return RatioVerdict::hypothesis_fail;
  if (ExactRatio(ExactInt(k) - t) > alpha * ExactRatio(ExactInt(n) - k))
    return RatioVerdict::hypothesis_fail;
  ExactInt lhs = binom(n - t - 3, k - t - l - 1);
  ExactInt rhs = binom(n - t - 3, k - t - l);
  // lhs <= alpha * rhs, cross-multiplied.
  ExactInt num = numerator(alpha), den = denominator(alpha);
  return den * lhs <= num * rhs ? RatioVerdict::pass : RatioVerdict::conclusion_fail;
}

FranklBounds frankl_bound_values(long long n, long long k, long long p) {
  if (!(0 <= p && p <= k - 1))
    throw parameter_error("frankl_bound_values: need 0 <= p <= k-1");
  FranklBounds out{binom(n, k - p - 1), std::nullopt};
  if (p >= 2) out.second = binom(n, k) - binom(n - p + 2, k) + binom(n - p + 2, k - 1);
  return out;
}

}  // namespace extremal
