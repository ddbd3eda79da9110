#include "extremal/suites.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <functional>

#include "extremal/exactmath.hpp"
#include "extremal/search.hpp"
#include "extremal/shifting.hpp"
#include "extremal/verifiers.hpp"

namespace extremal {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs body(i) for i in [0,count) across opts.threads workers; results must
/// be written into pre-sized slots so aggregation stays deterministic.
void parallel_for(int threads, std::size_t count, const std::function<void(std::size_t)>& body) {
  threads = std::max(1, threads);
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> futs;
  for (int w = 0; w < threads; ++w)
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count;
           i += static_cast<std::size_t>(threads))
        body(i);
    }));
  for (auto& f : futs) f.get();
}

int ordering_sign(Ordering o) {
  switch (o) {
    case Ordering::less: return -1;
    case Ordering::equal: return 0;
    case Ordering::greater: return 1;
  }
  return 0;
}

int exact_sign(const ExactInt& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace

SetFamily random_family(std::mt19937_64& rng, int n, int k, std::size_t target_size) {
  std::vector<SubsetMask> all = enumerate_ksubsets(n, k);
  std::shuffle(all.begin(), all.end(), rng);
  target_size = std::min(target_size, all.size());
  all.resize(target_size);
  return SetFamily::of(n, std::move(all), k);
}

// ---------------------------------------------------------------------------
// Criterion 1: formulas vs enumeration
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_formulas(int n_max, const SweepOptions& opts) {
  (void)opts;
  std::vector<VerdictReport> reports;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      Timer timer;
      VerdictReport r;
      r.claim_id = "formulas";
      r.parameters = {{"n", n}, {"k", k}};
      int checked = 0;
      for (int s = 1; s <= k + 1 && r.verdict == Verdict::pass; ++s) {
        if (ExactInt(build_A(n, k, s).size()) != size_A(n, k, s)) {
          r.verdict = Verdict::fail;
          r.certificate = {{"construction", "A"}, {"s", s}};
        }
        ++checked;
        if (s >= 2) {
          if (ExactInt(build_B(n, k, s).size()) != size_B(n, k, s)) {
            r.verdict = Verdict::fail;
            r.certificate = {{"construction", "B"}, {"s", s}};
          }
          ++checked;
        }
      }
      r.parameters["checked"] = checked;
      r.seconds = timer.seconds();
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Criterion 2 and the Theorem 1.2 analogue
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_eq_1_0(int k_max, const SweepOptions& opts) {
  std::vector<VerdictReport> reports(static_cast<std::size_t>(std::max(0, k_max - 3)));
  parallel_for(opts.threads, reports.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) + 4;
    Timer timer;
    VerdictReport r;
    r.claim_id = "eq-1.0";
    r.parameters = {{"k", k}};
    int checked = 0;
    for (int t = 1; t <= k - 3 && r.verdict == Verdict::pass; ++t) {
      for (int n = k + 1; n <= 3 * k; ++n) {
        const int lhs = exact_sign(size_A(n, k, t + 3) - binom(n - t, k - t));
        const int rhs = -ordering_sign(compare_n_to_n0(n, k, t));
        ++checked;
        if (lhs != rhs) {
          r.verdict = Verdict::fail;
          r.certificate = {{"n", n}, {"t", t}, {"size_sign", lhs}, {"threshold_sign", rhs}};
          break;
        }
      }
    }
    r.parameters["checked"] = checked;
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

std::vector<VerdictReport> sweep_eq_1_2(int k_max, const SweepOptions& opts) {
  std::vector<VerdictReport> reports(static_cast<std::size_t>(std::max(0, k_max - 1)));
  parallel_for(opts.threads, reports.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) + 2;
    Timer timer;
    VerdictReport r;
    r.claim_id = "eq-1.2";
    r.parameters = {{"k", k}};
    int checked = 0;
    for (int t = 1; t <= k - 1 && r.verdict == Verdict::pass; ++t) {
      const int pivot = (t + 1) * (k - t + 1);
      for (int n = k + 1; n <= pivot + k; ++n) {
        const int lhs = exact_sign(size_A(n, k, t + 2) - binom(n - t, k - t));
        const int rhs = exact_sign(ExactInt(pivot) - n);
        ++checked;
        if (lhs != rhs) {
          r.verdict = Verdict::fail;
          r.certificate = {{"n", n}, {"t", t}, {"size_sign", lhs}, {"pivot", pivot}};
          break;
        }
      }
    }
    r.parameters["checked"] = checked;
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

// ---------------------------------------------------------------------------
// Criterion 3: the Mathematica-checked threshold inequality
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_mathematica(int k_lo, int k_hi, const SweepOptions& opts) {
  if (k_hi < k_lo) return {};
  std::vector<VerdictReport> reports(static_cast<std::size_t>(k_hi - k_lo + 1));
  parallel_for(opts.threads, reports.size(), [&](std::size_t idx) {
    const int k = k_lo + static_cast<int>(idx);
    Timer timer;
    VerdictReport r;
    r.claim_id = "mathematica-claim";
    r.parameters = {{"k", k}};
    int checked = 0;
    for (int t = 46; t <= k - 3; ++t) {
      ++checked;
      if (!verify_mathematica_claim(k, t)) {
        r.verdict = Verdict::fail;
        r.certificate = {{"k", k}, {"t", t}};
        break;
      }
    }
    r.parameters["checked"] = checked;
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

std::vector<VerdictReport> sweep_corollary(int k_max, int t_lo, int t_hi,
                                           const SweepOptions& opts) {
  if (t_hi < t_lo) return {};
  std::vector<VerdictReport> reports(static_cast<std::size_t>(t_hi - t_lo + 1));
  parallel_for(opts.threads, reports.size(), [&](std::size_t idx) {
    const int t = t_lo + static_cast<int>(idx);
    Timer timer;
    VerdictReport r;
    r.claim_id = "corollary-bound";
    r.parameters = {{"t", t}};
    int checked = 0;
    for (int k = t + 1; k <= k_max; ++k) {
      ++checked;
      if (!verify_corollary_bound(k, t)) {
        r.verdict = Verdict::fail;
        r.certificate = {{"k", k}, {"t", t}};
        break;
      }
    }
    r.parameters["checked"] = checked;
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

std::vector<VerdictReport> sweep_thresholds(const SweepOptions& opts) {
  std::vector<VerdictReport> all = sweep_eq_1_0(40, opts);
  for (auto& r : sweep_eq_1_2(30, opts)) all.push_back(std::move(r));
  for (auto& r : sweep_mathematica(667, 700, opts)) all.push_back(std::move(r));
  for (auto& r : sweep_corollary(200, 46, 60, opts)) all.push_back(std::move(r));
  return all;
}

// ---------------------------------------------------------------------------
// Criterion 4: Exact EKR at desk scale
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_thm_1_2(const SweepOptions& opts) {
  struct Cell {
    int t, k;
  };
  std::vector<Cell> cells;
  for (int t = 1; t <= 3; ++t)
    for (int k = t; k <= 5; ++k) cells.push_back({t, k});

  std::vector<VerdictReport> reports(cells.size());
  parallel_for(opts.threads, cells.size(), [&](std::size_t idx) {
    const auto [t, k] = cells[idx];
    Timer timer;
    VerdictReport r;
    r.claim_id = "thm-1.2";
    r.parameters = {{"t", t}, {"k", k}};
    const int n_lo = std::max(k, (t + 1) * (k - t + 1));
    const int n_hi = std::min((t + 1) * (k - t + 1) + 3, 14);
    nlohmann::json values = nlohmann::json::array();
    for (int n = n_lo; n <= n_hi && r.verdict == Verdict::pass; ++n) {
      SearchOptions so;
      so.assume_shifted = true;
      so.node_budget = opts.node_budget;
      SearchOutcome shifted = solve_g(n, k, 2, t, so);
      const ExactInt expected = binom(n - t, k - t);
      if (!shifted.exact) {
        r.verdict = Verdict::budget_exceeded;
        break;
      }
      bool ok = shifted.optimum == expected;
      if (ok && n <= 10) {
        SearchOptions plain;
        plain.node_budget = opts.node_budget;
        SearchOutcome dflt = solve_g(n, k, 2, t, plain);
        if (!dflt.exact) {
          r.verdict = Verdict::budget_exceeded;
          break;
        }
        ok = dflt.optimum == shifted.optimum;
      }
      values.push_back({{"n", n}, {"value", shifted.optimum.str()}, {"expected", expected.str()}});
      if (!ok) {
        r.verdict = Verdict::fail;
        r.certificate = {{"n", n}, {"got", shifted.optimum.str()}, {"expected", expected.str()}};
      }
    }
    r.parameters["values"] = values;
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

// ---------------------------------------------------------------------------
// Criterion 5: the non-trivial maximum at (k,r,t) = (3,3,1)
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_thm_1_6(const SweepOptions& opts) {
  std::vector<VerdictReport> reports(3);
  parallel_for(opts.threads, reports.size(), [&](std::size_t idx) {
    const int n = 6 + static_cast<int>(idx);
    Timer timer;
    VerdictReport r;
    r.claim_id = "thm-1.6";
    r.parameters = {{"n", n}, {"k", 3}, {"r", 3}, {"t", 1}};
    SearchOptions so;
    so.node_budget = opts.node_budget;
    SearchOutcome got = solve_h(n, 3, 3, 1, so);
    const ExactInt expected = std::max(size_A(n, 3, 4), size_B(n, 3, 4));
    r.parameters["expected"] = expected.str();
    r.parameters["value"] = got.optimum.str();
    if (!got.exact)
      r.verdict = Verdict::budget_exceeded;
    else if (got.optimum != expected)
      r.verdict = Verdict::fail;
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

// ---------------------------------------------------------------------------
// Criterion 6: branch-and-bound vs full enumeration
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_oracle_equivalence(const SweepOptions& opts) {
  struct Cell {
    int n, k;
  };
  std::vector<Cell> cells;
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= std::min(3, n); ++k) cells.push_back({n, k});

  std::vector<VerdictReport> reports(cells.size());
  parallel_for(opts.threads, cells.size(), [&](std::size_t idx) {
    const auto [n, k] = cells[idx];
    Timer timer;
    VerdictReport r;
    r.claim_id = "oracle-equivalence";
    r.parameters = {{"n", n}, {"k", k}};
    int checked = 0;
    for (int rr = 2; rr <= 4 && r.verdict == Verdict::pass; ++rr) {
      for (int t = 1; t <= 3 && r.verdict == Verdict::pass; ++t) {
        SearchOptions plain;
        plain.node_budget = opts.node_budget;
        SearchOptions full = plain;
        full.exhaustive = true;
        for (bool nontrivial : {false, true}) {
          SearchOutcome bb = nontrivial ? solve_h(n, k, rr, t, plain) : solve_g(n, k, rr, t, plain);
          SearchOutcome ex = nontrivial ? solve_h(n, k, rr, t, full) : solve_g(n, k, rr, t, full);
          ++checked;
          if (!bb.exact || !ex.exact) {
            r.verdict = Verdict::budget_exceeded;
            break;
          }
          if (bb.optimum != ex.optimum) {
            r.verdict = Verdict::fail;
            r.certificate = {{"r", rr},
                             {"t", t},
                             {"mode", nontrivial ? "h" : "g"},
                             {"branch_bound", bb.optimum.str()},
                             {"exhaustive", ex.optimum.str()}};
            break;
          }
          // The witnesses themselves must satisfy the defining predicates.
          if (ex.optimum > 0) {
            const SetFamily& w = ex.witness;
            if (!is_rwise_t_intersecting(w, IntersectSpec{rr, t}) ||
                (nontrivial && !is_nontrivial(w, t)) ||
                ExactInt(w.size()) != ex.optimum) {
              r.verdict = Verdict::fail;
              r.certificate = {{"r", rr}, {"t", t}, {"reason", "invalid witness"}};
              break;
            }
          }
        }
      }
    }
    r.parameters["checked"] = checked;
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

// ---------------------------------------------------------------------------
// Criterion 7: cross-intersecting sum maxima
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_cross_sums(const SweepOptions& opts) {
  struct Cell {
    int n, k, m, t;
  };
  const std::vector<Cell> cells = {{4, 2, 2, 1}, {4, 2, 3, 1}, {5, 2, 2, 1}, {5, 2, 3, 1}};
  std::vector<VerdictReport> reports(cells.size());
  parallel_for(opts.threads, cells.size(), [&](std::size_t idx) {
    const auto [n, k, m, t] = cells[idx];
    Timer timer;
    VerdictReport r;
    r.claim_id = "thm-2.5-2.6";
    r.parameters = {{"n", n}, {"k", k}, {"m", m}, {"t", t}};
    SearchOptions so;
    so.node_budget = opts.node_budget;
    SearchOutcome got = solve_cross_sum(n, k, m, t, so);
    // Li-Zhang bound; Hilton's t=1 bound agrees on these instances.
    const ExactInt bound26 = std::max(binom(n, k), ExactInt(m) * binom(n - t, k - t));
    ExactInt bound25 = bound26;
    if (t == 1 && n >= 2 * k)
      bound25 = ExactInt(m) * k >= ExactInt(n) ? ExactInt(m) * binom(n - 1, k - 1) : binom(n, k);
    r.parameters["value"] = got.optimum.str();
    r.parameters["bound_2_6"] = bound26.str();
    r.parameters["bound_2_5"] = bound25.str();
    if (!got.exact) {
      r.verdict = Verdict::budget_exceeded;
    } else if (got.optimum != bound26 || got.optimum != bound25) {
      r.verdict = Verdict::fail;
      r.certificate = {{"value", got.optimum.str()}};
    } else {
      // Witness tuple must genuinely be pairwise cross t-intersecting.
      ExactInt total = 0;
      for (const SetFamily& f : got.witnesses) total += f.size();
      if (total != got.optimum || !are_cross_t_intersecting(got.witnesses, t)) {
        r.verdict = Verdict::fail;
        r.certificate = {{"reason", "invalid witness tuple"}};
      }
    }
    r.seconds = timer.seconds();
    reports[idx] = std::move(r);
  });
  return reports;
}

std::vector<VerdictReport> sweep_search_small(const SweepOptions& opts) {
  std::vector<VerdictReport> all = sweep_thm_1_2(opts);
  for (auto& r : sweep_thm_1_6(opts)) all.push_back(std::move(r));
  for (auto& r : sweep_oracle_equivalence(opts)) all.push_back(std::move(r));
  for (auto& r : sweep_cross_sums(opts)) all.push_back(std::move(r));
  return all;
}

// ---------------------------------------------------------------------------
// Criterion 8: shifting suite
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_shifting(int families, const SweepOptions& opts) {
  Timer timer;
  VerdictReport r;
  r.claim_id = "shifting-suite";
  r.parameters = {{"families", families}, {"seed", opts.seed}};
  std::mt19937_64 rng(opts.seed);
  int property_checks = 0;
  for (int run = 0; run < families && r.verdict == Verdict::pass; ++run) {
    const int n = 4 + static_cast<int>(rng() % 7);             // 4..10
    const int k = 1 + static_cast<int>(rng() % std::min(4, n - 1));
    const std::size_t target = 1 + rng() % 30;
    SetFamily f = random_family(rng, n, k, target);
    auto fail = [&](const char* what) {
      r.verdict = Verdict::fail;
      r.certificate = {{"reason", what}, {"family", to_family_json(f)}};
    };

    // One random shift preserves size and any intersecting property held.
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const int j = i + 1 + static_cast<int>(rng() % (n - i));
    SetFamily image = apply_shift(f, i, j);
    if (image.size() != f.size()) {
      fail("size not preserved");
      break;
    }
    for (int rr = 2; rr <= 3; ++rr) {
      for (int t = 1; t <= k; ++t) {
        if (is_rwise_t_intersecting(f, IntersectSpec{rr, t})) {
          ++property_checks;
          if (!is_rwise_t_intersecting(image, IntersectSpec{rr, t})) {
            fail("intersecting property not preserved");
            break;
          }
        }
      }
      if (r.verdict != Verdict::pass) break;
    }
    if (r.verdict != Verdict::pass) break;

    auto [fix, log] = shift_to_fixpoint(f);
    if (fix.size() != f.size()) {
      fail("fixpoint changed the family size");
      break;
    }
    if (!is_shifted(fix)) {
      fail("fixpoint not shifted");
      break;
    }
    if (!check_down_closure(fix)) {
      fail("fixpoint not down-closed");
      break;
    }
    if (!(replay_shift_log(f, log) == fix)) {
      fail("log replay mismatch");
      break;
    }
  }
  r.parameters["property_checks"] = property_checks;
  r.seconds = timer.seconds();
  return {r};
}

// ---------------------------------------------------------------------------
// Criterion 9: lemma suite
// ---------------------------------------------------------------------------

namespace {

VerdictReport ratio_lemma_block(const SweepOptions& opts, std::uint64_t instances) {
  Timer timer;
  VerdictReport r;
  r.claim_id = "ineq-3.0";
  r.parameters = {{"instances", instances}, {"seed", opts.seed}};
  std::mt19937_64 rng(opts.seed ^ 0x1337);
  for (std::uint64_t it = 0; it < instances; ++it) {
    const long long t = 1 + static_cast<long long>(rng() % 8);
    const long long k = t + 2 + static_cast<long long>(rng() % 30);
    const long long l = 1 + static_cast<long long>(rng() % (k - t - 1));
    const long long q = 2 + static_cast<long long>(rng() % 19);
    const long long p = 1 + static_cast<long long>(rng() % (q - 1));  // alpha = p/q in (0,1)
    ExactRatio alpha(p, q);
    // choose n so that k-t <= alpha(n-k); ceil(k + (k-t)q/p) plus slack
    const long long n = k + ((k - t) * q + p - 1) / p + static_cast<long long>(rng() % 12);
    RatioVerdict v = ratio_lemma_check(n, k, t, l, alpha);
    if (v == RatioVerdict::conclusion_fail) {
      r.verdict = Verdict::fail;
      r.certificate = {{"n", n}, {"k", k}, {"t", t}, {"l", l},
                       {"alpha", std::to_string(p) + "/" + std::to_string(q)}};
      break;
    }
    if (v == RatioVerdict::hypothesis_fail) {
      r.verdict = Verdict::fail;
      r.certificate = {{"reason", "generator produced hypothesis violation"},
                       {"n", n}, {"k", k}, {"t", t}, {"l", l}};
      break;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

VerdictReport lemma_2_9_block(const SweepOptions& opts) {
  Timer timer;
  VerdictReport r;
  r.claim_id = "lemma-2.9";
  r.parameters = {{"seed", opts.seed}};
  int instances = 0;
  std::mt19937_64 rng(opts.seed ^ 0x29);
  auto run_one = [&](const SetFamily& f, int s, int rr, int t) {
    if (r.verdict != Verdict::pass) return;
    ++instances;
    LemmaInstance inst = verify_lemma_2_9(f, s, rr, t, 2000, rng());
    if (inst.verdict != Verdict::pass) {
      r.verdict = inst.verdict;
      r.certificate = inst.certificate;
      r.certificate["family"] = to_family_json(f);
    }
  };
  for (int t = 1; t <= 2; ++t) {
    for (int rr = 2; rr <= 3; ++rr) {
      for (int k = t + rr - 1; k <= 5; ++k) {
        for (int n = k + 1; n <= 9; ++n) {
          SetFamily a = build_A(n, k, t + rr);
          for (int s = t; s <= t + 2 && s <= n; ++s) run_one(a, s, rr, t);
          if (t + rr <= k + 1) {
            SetFamily b = build_B(n, k, t + rr);
            for (int s = t; s <= t + 2 && s <= n; ++s) run_one(b, s, rr, t);
          }
        }
      }
    }
  }
  // Shifted fixpoints of random families, filtered to the hypothesis.
  for (int run = 0; run < 120 && r.verdict == Verdict::pass; ++run) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const int k = 2 + static_cast<int>(rng() % 3);
    if (k >= n) continue;
    SetFamily f = shift_to_fixpoint(random_family(rng, n, k, 1 + rng() % 12)).first;
    if (f.empty()) continue;
    for (int rr = 2; rr <= 3; ++rr) {
      for (int t = 1; t <= 2; ++t) {
        if (!is_rwise_t_intersecting(f, IntersectSpec{rr, t})) continue;
        run_one(f, t + 1, rr, t);
      }
    }
  }
  r.parameters["instances"] = instances;
  r.seconds = timer.seconds();
  return r;
}

VerdictReport prop_2_3_block(const SweepOptions& opts) {
  Timer timer;
  VerdictReport r;
  r.claim_id = "prop-2.3";
  r.parameters = {{"seed", opts.seed}};
  std::mt19937_64 rng(opts.seed ^ 0x23);
  int instances = 0;
  for (int run = 0; run < 400 && r.verdict == Verdict::pass; ++run) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    if (k >= n) continue;
    SetFamily f = shift_to_fixpoint(random_family(rng, n, k, 1 + rng() % 40)).first;
    if (f.empty()) continue;
    for (int p = 0; p <= k - 1; ++p) {
      if (2 * k - p <= n) {
        ++instances;
        LemmaInstance inst = verify_prop_2_3(f, p, FranklVariant::first);
        if (inst.verdict == Verdict::fail) {
          r.verdict = Verdict::fail;
          r.certificate = inst.certificate;
          break;
        }
      }
      if (p >= 2 && p + 2 * k - 2 <= n) {
        ++instances;
        LemmaInstance inst = verify_prop_2_3(f, p, FranklVariant::second);
        if (inst.verdict == Verdict::fail) {
          r.verdict = Verdict::fail;
          r.certificate = inst.certificate;
          break;
        }
      }
    }
  }
  r.parameters["instances"] = instances;
  r.seconds = timer.seconds();
  return r;
}

VerdictReport lemma_2_4_block(const SweepOptions& opts) {
  Timer timer;
  VerdictReport r;
  r.claim_id = "lemma-2.4";
  r.parameters = {{"seed", opts.seed}};
  std::mt19937_64 rng(opts.seed ^ 0x24);
  int instances = 0;
  for (int run = 0; run < 2000 && r.verdict == Verdict::pass; ++run) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const int k = 2 + static_cast<int>(rng() % 3);
    if (k >= n) continue;
    SetFamily f = random_family(rng, n, k, 1 + rng() % 25);
    for (int t = 1; t <= k; ++t) {
      LemmaInstance inst = verify_lemma_2_4(f, t);
      if (inst.verdict == Verdict::fail) {
        r.verdict = Verdict::fail;
        r.certificate = inst.certificate;
        break;
      }
      if (inst.verdict == Verdict::pass) ++instances;
    }
  }
  r.parameters["instances"] = instances;
  r.seconds = timer.seconds();
  return r;
}

VerdictReport lemma_3_block(const SweepOptions& opts) {
  Timer timer;
  VerdictReport r;
  r.claim_id = "lemma-3.1-3.2";
  r.parameters = {{"seed", opts.seed}};
  std::mt19937_64 rng(opts.seed ^ 0x31);
  int instances = 0;
  auto run_one = [&](const SetFamily& f, int t) {
    if (r.verdict != Verdict::pass) return;
    instances += 2;
    LemmaInstance a = verify_lemma_3_1(f, t);
    LemmaInstance b = verify_lemma_3_2(f, t);
    if (a.verdict != Verdict::pass || b.verdict != Verdict::pass) {
      r.verdict = Verdict::fail;
      r.certificate = a.verdict != Verdict::pass ? a.certificate : b.certificate;
    }
  };
  for (int t = 1; t <= 3; ++t) {
    for (int k = t + 3; k <= t + 4; ++k) {
      for (int n = std::max(k + 1, t + 4); n <= std::min(11, k + 4); ++n) {
        run_one(build_A(n, k, t + 3), t);
        if (t + 3 <= k + 1) run_one(build_B(n, k, t + 3), t);
      }
    }
  }
  // Random shifted non-trivial 3-wise t-intersecting families.
  for (int run = 0; run < 600 && r.verdict == Verdict::pass; ++run) {
    const int t = 1 + static_cast<int>(rng() % 2);
    const int n = t + 4 + static_cast<int>(rng() % 3);
    const int k = t + 3;
    if (k >= n) continue;
    SetFamily f = shift_to_fixpoint(random_family(rng, n, k, 2 + rng() % 8)).first;
    if (f.empty() || !is_rwise_t_intersecting(f, IntersectSpec{3, t})) continue;
    if (!is_nontrivial(f, t)) continue;
    run_one(f, t);
  }
  r.parameters["instances"] = instances;
  r.seconds = timer.seconds();
  return r;
}

VerdictReport prop_4_3_block(const SweepOptions& opts) {
  (void)opts;
  Timer timer;
  VerdictReport r;
  r.claim_id = "prop-4.3";
  int instances = 0;
  const std::vector<std::pair<int, int>> shapes = {{5, 2}, {6, 2}};
  const std::vector<ExactRatio> betas = {ExactRatio(0), ExactRatio(1, 2), ExactRatio(1),
                                         ExactRatio(3, 2), ExactRatio(2)};
  for (auto [m, s] : shapes) {
    for (const ExactRatio& beta : betas) {
      ++instances;
      LemmaInstance inst = verify_prop_4_3(m, s, beta);
      if (inst.verdict != Verdict::pass) {
        r.verdict = inst.verdict;
        r.certificate = inst.certificate;
        break;
      }
    }
    if (r.verdict != Verdict::pass) break;
  }
  r.parameters["instances"] = instances;
  r.seconds = timer.seconds();
  return r;
}

}  // namespace

std::vector<VerdictReport> sweep_lemmas(const SweepOptions& opts) {
  std::vector<VerdictReport> reports(6);
  std::vector<std::function<VerdictReport()>> blocks = {
      [&] { return ratio_lemma_block(opts, 100000); },
      [&] { return lemma_2_9_block(opts); },
      [&] { return prop_2_3_block(opts); },
      [&] { return lemma_2_4_block(opts); },
      [&] { return lemma_3_block(opts); },
      [&] { return prop_4_3_block(opts); },
  };
  parallel_for(opts.threads, blocks.size(), [&](std::size_t i) { reports[i] = blocks[i](); });
  return reports;
}

// ---------------------------------------------------------------------------
// Criterion 10: non-uniform conjecture evidence
// ---------------------------------------------------------------------------

std::vector<VerdictReport> sweep_conjecture_6_2(int n_max, const SweepOptions& opts) {
  struct Cell {
    int n, r, t;
  };
  std::vector<Cell> cells;
  for (int r = 2; r <= 3; ++r)
    for (int t = 1; t <= 3; ++t)
      for (int n = t; n <= n_max; ++n) cells.push_back({n, r, t});

  std::vector<VerdictReport> reports(cells.size());
  parallel_for(opts.threads, cells.size(), [&](std::size_t idx) {
    const auto [n, r, t] = cells[idx];
    Timer timer;
    SearchOptions so;
    so.node_budget = opts.node_budget;
    VerdictReport rep = conjecture_6_2_evidence(n, r, t, so);
    rep.seconds = timer.seconds();
    reports[idx] = std::move(rep);
  });
  return reports;
}

}  // namespace extremal
