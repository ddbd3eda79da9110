#include "extremal/verifiers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <sstream>

#include "extremal/shifting.hpp"

namespace extremal {

VerdictReport LemmaInstance::to_report() const {
  VerdictReport r;
  r.claim_id = lemma_id;
  r.parameters = parameters;
  if (!detail.empty()) r.parameters["detail"] = detail;
  r.verdict = verdict;
  r.certificate = certificate;
  return r;
}

namespace {

std::vector<int> bit_elements(std::uint64_t bits) {
  std::vector<int> out;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

}  // namespace

LemmaInstance verify_lemma_2_9(const SetFamily& f, int s, int r, int t, std::uint64_t trials,
                               std::uint64_t seed) {
  LemmaInstance inst;
  inst.lemma_id = "lemma-2.9";
  inst.parameters = {{"n", f.ground_size()}, {"s", s}, {"r", r}, {"t", t}, {"trials", trials}};
  if (s < t || t < 1 || r < 2) throw parameter_error("verify_lemma_2_9: need s >= t >= 1, r >= 2");
  if (!is_shifted(f) || !is_rwise_t_intersecting(f, IntersectSpec{r, t}))
    throw precondition_error("verify_lemma_2_9: family must be shifted r-wise t-intersecting");

  const int n = f.ground_size();
  const std::uint64_t smask = prefix_bits(n, s);
  // Quotient residuals F(A,[s]) for every trace A in 2^[s].
  std::vector<std::vector<std::uint64_t>> residuals(std::size_t{1} << s);
  for (const SubsetMask& m : f.members())
    residuals[m.bits() & smask].push_back(m.bits() & ~smask);

  std::mt19937_64 rng(seed);
  std::uint64_t tuples_checked = 0;
  constexpr std::uint64_t kExhaustiveCap = 2'000'000;

  std::vector<std::uint64_t> traces(static_cast<std::size_t>(r));
  std::function<bool(int, std::uint64_t, int)> scan_traces = [&](int pos, std::uint64_t inter,
                                                                 int size_sum) -> bool {
    if (pos == r) {
      if (std::popcount(inter) >= t) return true;  // outside the quantifier
      const long long bound = static_cast<long long>(r - 1) * s + t - size_sum;
      if (bound <= 0) return true;
      std::uint64_t product = 1;
      bool overflow = false;
      for (int i = 0; i < r; ++i) {
        std::size_t sz = residuals[traces[static_cast<std::size_t>(i)]].size();
        if (sz == 0) return true;  // vacuous
        if (product > kExhaustiveCap / sz) overflow = true;
        product *= sz;
        if (overflow) break;
      }
      auto check_tuple = [&](const std::vector<std::size_t>& pick) -> bool {
        std::uint64_t binter = ~std::uint64_t{0};
        for (int i = 0; i < r; ++i)
          binter &= residuals[traces[static_cast<std::size_t>(i)]][pick[static_cast<std::size_t>(i)]];
        ++tuples_checked;
        if (std::popcount(binter) >= bound) return true;
        nlohmann::json cert;
        cert["traces"] = nlohmann::json::array();
        cert["residuals"] = nlohmann::json::array();
        for (int i = 0; i < r; ++i) {
          cert["traces"].push_back(bit_elements(traces[static_cast<std::size_t>(i)]));
          cert["residuals"].push_back(bit_elements(
              residuals[traces[static_cast<std::size_t>(i)]][pick[static_cast<std::size_t>(i)]]));
        }
        cert["required"] = bound;
        cert["actual"] = std::popcount(binter);
        inst.certificate = cert;
        return false;
      };
      std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
      if (!overflow && product <= kExhaustiveCap) {
        while (true) {
          if (!check_tuple(pick)) return false;
          int i = r - 1;
          while (i >= 0) {
            if (++pick[static_cast<std::size_t>(i)] <
                residuals[traces[static_cast<std::size_t>(i)]].size())
              break;
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
          }
          if (i < 0) break;
        }
      } else {
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
          for (int i = 0; i < r; ++i)
            pick[static_cast<std::size_t>(i)] =
                rng() % residuals[traces[static_cast<std::size_t>(i)]].size();
          if (!check_tuple(pick)) return false;
        }
      }
      return true;
    }
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << s); ++a) {
      traces[static_cast<std::size_t>(pos)] = a;
      if (!scan_traces(pos + 1, pos == 0 ? a : (inter & a), size_sum + std::popcount(a)))
        return false;
    }
    return true;
  };

  bool ok = scan_traces(0, ~std::uint64_t{0}, 0);
  inst.verdict = ok ? Verdict::pass : Verdict::fail;
  inst.detail = "tuples=" + std::to_string(tuples_checked);
  return inst;
}

LemmaInstance verify_prop_2_3(const SetFamily& f, int p, FranklVariant variant) {
  LemmaInstance inst;
  inst.lemma_id = "prop-2.3";
  inst.parameters = {{"n", f.ground_size()}, {"p", p},
                     {"variant", variant == FranklVariant::first ? "first" : "second"}};
  auto kopt = f.uniform_k();
  if (!kopt) throw precondition_error("verify_prop_2_3: family must be k-uniform");
  if (!is_shifted(f)) throw precondition_error("verify_prop_2_3: family must be shifted");
  const int n = f.ground_size(), k = *kopt;
  inst.parameters["k"] = k;

  std::uint64_t designated = 0;
  ExactInt bound;
  if (variant == FranklVariant::first) {
    if (!(0 <= p && p <= k - 1)) throw parameter_error("verify_prop_2_3: need 0 <= p <= k-1");
    if (2 * k - p > n) throw parameter_error("verify_prop_2_3: designated set exceeds [n]");
    designated = prefix_bits(n, p);
    for (int e = p + 2; e <= 2 * k - p; e += 2) designated |= std::uint64_t{1} << (e - 1);
    bound = frankl_bound_values(n, k, p).first;
  } else {
    if (!(2 <= p && p <= k - 1)) throw parameter_error("verify_prop_2_3: need 2 <= p <= k-1");
    if (p + 2 * k - 2 > n) throw parameter_error("verify_prop_2_3: designated set exceeds [n]");
    for (int e = p; e <= p + 2 * k - 2; e += 2) designated |= std::uint64_t{1} << (e - 1);
    bound = *frankl_bound_values(n, k, p).second;
  }
  inst.parameters["designated"] = bit_elements(designated);
  inst.parameters["bound"] = bound.str();

  if (f.contains(SubsetMask::from_bits(n, designated))) {
    inst.verdict = Verdict::not_applicable;
    inst.detail = "designated set present";
    return inst;
  }
  if (ExactInt(f.size()) <= bound) {
    inst.verdict = Verdict::pass;
  } else {
    inst.verdict = Verdict::fail;
    inst.certificate = to_family_json(f);
  }
  return inst;
}

LemmaInstance verify_lemma_2_4(const SetFamily& f, int t) {
  LemmaInstance inst;
  inst.lemma_id = "lemma-2.4";
  inst.parameters = {{"n", f.ground_size()}, {"t", t}, {"size", f.size()}};
  auto kopt = f.uniform_k();
  const int n = f.ground_size();
  if (!kopt || t < 1 || *kopt < t || !(n > 2 * *kopt - t) ||
      !is_rwise_t_intersecting(f, IntersectSpec{2, t})) {
    inst.verdict = Verdict::not_applicable;
    inst.detail = "hypothesis not satisfied";
    return inst;
  }
  const int k = *kopt;
  inst.parameters["k"] = k;
  ExactInt bound = binom(n, k - t);
  inst.parameters["bound"] = bound.str();
  if (ExactInt(f.size()) <= bound) {
    inst.verdict = Verdict::pass;
  } else {
    inst.verdict = Verdict::fail;
    inst.certificate = to_family_json(f);
  }
  return inst;
}

namespace {

void require_lemma3_preconditions(const SetFamily& f, int t, const char* who) {
  if (t < 1) throw parameter_error(std::string(who) + ": t >= 1 required");
  if (f.ground_size() < t + 3)
    throw parameter_error(std::string(who) + ": ground set must contain [t+3]");
  if (f.empty() || !f.uniform_k())
    throw precondition_error(std::string(who) + ": non-empty k-uniform family required");
  if (!is_shifted(f) || !is_rwise_t_intersecting(f, IntersectSpec{3, t}) || !is_nontrivial(f, t))
    throw precondition_error(std::string(who) +
                             ": family must be shifted non-trivial 3-wise t-intersecting");
}

/// Largest j with F 2-wise (t+j)-intersecting (0 when none); repetition
/// included, so a singleton family contributes its own cardinality.
int pairwise_surplus(const SetFamily& f, int t) {
  int min_meet = f.member(0).cardinality();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      min_meet = std::min(min_meet, (f.member(i) & f.member(j)).cardinality());
  return min_meet - t;
}

bool clause(LemmaInstance& inst, const std::string& name, bool ok, const nlohmann::json& info) {
  if (!ok) {
    inst.verdict = Verdict::fail;
    inst.certificate[name] = info;
  }
  inst.detail += (inst.detail.empty() ? "" : ",") + name + (ok ? ":pass" : ":FAIL");
  return ok;
}

}  // namespace

LemmaInstance verify_lemma_3_1(const SetFamily& f, int t) {
  require_lemma3_preconditions(f, t, "verify_lemma_3_1");
  LemmaInstance inst;
  inst.lemma_id = "lemma-3.1";
  inst.parameters = {{"n", f.ground_size()}, {"k", *f.uniform_k()}, {"t", t}, {"size", f.size()}};
  const int n = f.ground_size();
  const int j_extra = pairwise_surplus(f, t);

  // (i): residuals of deep slices are 3-wise (3i-3)-intersecting.
  for (int i = 4; i <= t + 3; ++i) {
    bool ok = true;
    for_each_ksubset(t + 3, t + 3 - i >= 0 ? t + 3 - i : 0, [&](const SubsetMask& Tsmall) {
      SubsetMask T = SubsetMask::from_bits(n, Tsmall.bits());
      if (!is_rwise_t_intersecting(tilde_slice(f, t, i, T), IntersectSpec{3, 3 * i - 3}))
        ok = false;
    });
    clause(inst, "i(i=" + std::to_string(i) + ")", ok, {{"i", i}});
    if (!ok) break;
  }

  // (ii): trace-t residuals.
  const std::uint64_t t_prefix = prefix_bits(n, t);
  for_each_ksubset(t + 3, t, [&](const SubsetMask& Tsmall) {
    SubsetMask T = SubsetMask::from_bits(n, Tsmall.bits());
    SetFamily res = tilde_slice(f, t, 3, T);
    clause(inst, "ii.2wise4(" + T.to_string() + ")",
           is_rwise_t_intersecting(res, IntersectSpec{2, 4}), {{"T", bit_elements(T.bits())}});
    if (T.bits() != t_prefix)
      clause(inst, "ii.3wise6(" + T.to_string() + ")",
             is_rwise_t_intersecting(res, IntersectSpec{3, 6}), {{"T", bit_elements(T.bits())}});
    if (j_extra >= 1)
      clause(inst, "ii.extra(" + T.to_string() + ")",
             is_rwise_t_intersecting(res, IntersectSpec{2, 3 + j_extra}),
             {{"T", bit_elements(T.bits())}, {"j", j_extra}});
  });

  // (iii): trace-(t+1) residuals other than [t+1].
  const std::uint64_t t1_prefix = prefix_bits(n, t + 1);
  for_each_ksubset(t + 3, t + 1, [&](const SubsetMask& Tsmall) {
    if (Tsmall.bits() == t1_prefix) return;
    SubsetMask T = SubsetMask::from_bits(n, Tsmall.bits());
    SetFamily res = tilde_slice(f, t, 2, T);
    clause(inst, "iii.2wise2(" + T.to_string() + ")",
           is_rwise_t_intersecting(res, IntersectSpec{2, 2}), {{"T", bit_elements(T.bits())}});
    if ((T.bits() & t_prefix) != t_prefix)
      clause(inst, "iii.3wise3(" + T.to_string() + ")",
             is_rwise_t_intersecting(res, IntersectSpec{3, 3}), {{"T", bit_elements(T.bits())}});
    if (j_extra >= 1)
      clause(inst, "iii.extra(" + T.to_string() + ")",
             is_rwise_t_intersecting(res, IntersectSpec{2, j_extra + 1}),
             {{"T", bit_elements(T.bits())}, {"j", j_extra}});
  });

  if (inst.verdict == Verdict::fail) inst.certificate["family"] = to_family_json(f);
  return inst;
}

LemmaInstance verify_lemma_3_2(const SetFamily& f, int t) {
  require_lemma3_preconditions(f, t, "verify_lemma_3_2");
  LemmaInstance inst;
  inst.lemma_id = "lemma-3.2";
  inst.parameters = {{"n", f.ground_size()}, {"k", *f.uniform_k()}, {"t", t}, {"size", f.size()}};
  const int n = f.ground_size();
  const std::uint64_t t_prefix = prefix_bits(n, t);
  const std::uint64_t t1_prefix = prefix_bits(n, t + 1);
  SetFamily pivot = tilde_slice(f, t, 2, SubsetMask::from_bits(n, t1_prefix));

  auto cross_ok = [&](const SetFamily& other, int ct) {
    return are_cross_t_intersecting({pivot, other}, ct);
  };

  for (int i = 4; i <= t + 3; ++i) {
    bool ok = true;
    for_each_ksubset(t + 3, t + 3 - i >= 0 ? t + 3 - i : 0, [&](const SubsetMask& Tsmall) {
      SubsetMask T = SubsetMask::from_bits(n, Tsmall.bits());
      if (!cross_ok(tilde_slice(f, t, i, T), 2 * i - 1)) ok = false;
    });
    clause(inst, "i(i=" + std::to_string(i) + ")", ok, {{"i", i}});
    if (!ok) break;
  }

  for_each_ksubset(t + 3, t, [&](const SubsetMask& Tsmall) {
    SubsetMask T = SubsetMask::from_bits(n, Tsmall.bits());
    SetFamily res = tilde_slice(f, t, 3, T);
    const int ct = Tsmall.bits() == t_prefix ? 3 : 5;
    clause(inst, "ii(" + T.to_string() + ")", cross_ok(res, ct),
           {{"T", bit_elements(T.bits())}, {"ct", ct}});
  });

  for_each_ksubset(t + 3, t + 1, [&](const SubsetMask& Tsmall) {
    SubsetMask T = SubsetMask::from_bits(n, Tsmall.bits());
    SetFamily res = tilde_slice(f, t, 2, T);
    if ((Tsmall.bits() & t1_prefix) == t_prefix)
      clause(inst, "iii.cross2(" + T.to_string() + ")", cross_ok(res, 2),
             {{"T", bit_elements(T.bits())}});
    if ((Tsmall.bits() & t_prefix) != t_prefix)
      clause(inst, "iii.cross3(" + T.to_string() + ")", cross_ok(res, 3),
             {{"T", bit_elements(T.bits())}});
  });

  for (int j = 1; j <= t + 1; ++j) {
    SubsetMask T = SubsetMask::from_bits(n, prefix_bits(n, t + 3)).without(j);
    clause(inst, "iv(j=" + std::to_string(j) + ")", cross_ok(tilde_slice(f, t, 1, T), 1),
           {{"j", j}});
  }

  if (inst.verdict == Verdict::fail) inst.certificate["family"] = to_family_json(f);
  return inst;
}

LemmaInstance verify_prop_4_3(int m, int s, const ExactRatio& beta) {
  LemmaInstance inst;
  inst.lemma_id = "prop-4.3";
  {
    std::ostringstream b;
    b << beta;
    inst.parameters = {{"m", m}, {"s", s}, {"beta", b.str()}};
  }
  if (!(m > 2 * s && s >= 1)) throw parameter_error("verify_prop_4_3: need m > 2s >= 2");
  if (beta < 0) throw parameter_error("verify_prop_4_3: beta >= 0 required");
  const std::uint64_t np = binom64(m, s);
  if (np > 20) {
    inst.verdict = Verdict::budget_exceeded;
    inst.detail = "C(m,s) too large for exhaustive pair scan";
    return inst;
  }
  std::vector<std::uint64_t> ps, rs;
  for_each_ksubset(m, s, [&](const SubsetMask& x) { ps.push_back(x.bits()); });
  for_each_ksubset(m, s + 1, [&](const SubsetMask& x) { rs.push_back(x.bits()); });

  // pmask[j]: which s-sets intersect the j-th (s+1)-set.
  std::vector<std::uint64_t> pmask(rs.size(), 0);
  for (std::size_t j = 0; j < rs.size(); ++j)
    for (std::size_t i = 0; i < ps.size(); ++i)
      if ((rs[j] & ps[i]) != 0) pmask[j] |= std::uint64_t{1} << i;

  const ExactInt threshold = binom(m - 1, s - 1) + binom(m - 2, s - 1);
  const ExactRatio cap1(binom(m, s));
  const ExactRatio cap2 = ExactRatio(threshold) + beta * ExactRatio(binom(m - 2, s - 1));
  const ExactRatio cap = std::max(cap1, cap2);
  inst.parameters["threshold"] = threshold.str();

  const std::uint64_t total = std::uint64_t{1} << ps.size();
  for (std::uint64_t P = 0; P < total; ++P) {
    const int psize = std::popcount(P);
    if (ExactInt(psize) < threshold) continue;
    // Largest cross-intersecting partner: R keeps every (s+1)-set meeting all of P.
    int rsize = 0;
    for (std::size_t j = 0; j < rs.size(); ++j)
      if ((P & ~pmask[j]) == 0) ++rsize;
    if (ExactRatio(psize) + beta * ExactRatio(rsize) > cap) {
      inst.verdict = Verdict::fail;
      nlohmann::json cert;
      cert["P_size"] = psize;
      cert["R_size"] = rsize;
      nlohmann::json parr = nlohmann::json::array();
      for (std::size_t i = 0; i < ps.size(); ++i)
        if ((P >> i) & 1) parr.push_back(bit_elements(ps[i]));
      cert["P"] = parr;
      inst.certificate = cert;
      return inst;
    }
  }
  inst.verdict = Verdict::pass;
  return inst;
}

VerdictReport conjecture_6_2_evidence(int n, int r, int t, const SearchOptions& opts) {
  VerdictReport report;
  report.claim_id = "conj-6.2";
  report.parameters = {{"n", n}, {"r", r}, {"t", t}};
  if (t > n) {
    report.verdict = Verdict::not_applicable;
    return report;
  }
  ExactInt best_bs = 0;
  int best_s = 0;
  for (int s = 0; t + static_cast<long long>(r) * s <= n; ++s) {
    ExactInt v = size_Bs(n, r, t, s);
    if (v > best_bs) {
      best_bs = v;
      best_s = s;
    }
  }
  SearchOutcome outcome = solve_g_nonuniform(n, r, t, opts);
  report.parameters["max_Bs"] = best_bs.str();
  report.parameters["best_s"] = best_s;
  report.parameters["search_max"] = outcome.optimum.str();
  report.parameters["nodes"] = outcome.nodes_explored;
  if (!outcome.exact) {
    report.verdict = Verdict::budget_exceeded;
    return report;
  }
  if (outcome.optimum < best_bs)
    throw internal_error("conjecture_6_2_evidence: search missed the seeded B_s family");
  if (outcome.optimum == best_bs) {
    report.verdict = Verdict::pass;
  } else {
    report.verdict = Verdict::fail;
    report.certificate = to_family_json(outcome.witness);
  }
  return report;
}

}  // namespace extremal
