#include "extremal/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <unordered_map>
#include <unordered_set>

namespace extremal {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("EXTREMAL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1'000'000'000ULL;
}

namespace {

enum class Closure { none, down_shift, up_superset };

constexpr std::uint64_t kMaxUniverse = std::uint64_t{1} << 22;
constexpr std::size_t kMaxColorable = 4096;

/// A set F with sorted elements f_1 < ... < f_k can belong to a down-closed
/// r-wise t-intersecting family only if (r-1)(f_j - j) <= j - t for some
/// j >= t: otherwise r-1 predecessors of F inside the closure jointly avoid
/// all but t-1 elements of F.
bool admissible_in_shifted(std::uint64_t mask, int r, int t) {
  int j = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    ++j;
    if (j < t) continue;
    int f = std::countr_zero(rest) + 1;
    if (static_cast<long long>(r - 1) * (f - j) <= j - t) return true;
  }
  return false;
}

struct Universe {
  int n = 0;
  int r = 2;
  int t = 1;
  Closure closure = Closure::none;
  std::vector<std::uint64_t> masks;      // branching order
  std::vector<std::vector<int>> covers;  // down_shift: predecessor indices
  std::vector<int> index_table;          // up_superset: mask -> index, size 2^n
  bool has_conflict = false;
  std::size_t words = 0;
  std::vector<std::uint64_t> conflict;

  const std::uint64_t* row(std::size_t i) const { return conflict.data() + i * words; }

  void build_conflicts() {
    const std::size_t m = masks.size();
    if (m == 0 || m > kMaxColorable) return;
    words = (m + 63) / 64;
    conflict.assign(m * words, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (std::popcount(masks[i] & masks[j]) < t) {
          conflict[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
          conflict[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
        }
    has_conflict = true;
  }

  void build_closure_structure() {
    if (closure == Closure::down_shift) {
      std::unordered_map<std::uint64_t, int> index_of;
      index_of.reserve(masks.size() * 2);
      for (std::size_t i = 0; i < masks.size(); ++i) index_of[masks[i]] = static_cast<int>(i);
      covers.resize(masks.size());
      for (std::size_t i = 0; i < masks.size(); ++i) {
        const std::uint64_t m = masks[i];
        for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
          int e = std::countr_zero(rest) + 1;
          if (e >= 2 && !((m >> (e - 2)) & 1)) {
            std::uint64_t pred = (m ^ (std::uint64_t{1} << (e - 1))) | (std::uint64_t{1} << (e - 2));
            auto it = index_of.find(pred);
            if (it == index_of.end())
              throw internal_error("shifted universe not closed under predecessors");
            covers[i].push_back(it->second);
          }
        }
      }
    } else if (closure == Closure::up_superset) {
      index_table.assign(std::size_t{1} << n, -1);
      for (std::size_t i = 0; i < masks.size(); ++i)
        index_table[masks[i]] = static_cast<int>(i);
    }
  }
};

/// Distinct intersections of up-to-(r-1)-subsets of the current family,
/// layered by subset size. A candidate c extends the family iff
/// popcount(m & c) >= t for every stored mask m.
struct Layers {
  std::vector<std::vector<std::uint64_t>> stack;  // layer j: (j+1)-subset meets
  std::vector<std::unordered_set<std::uint64_t>> present;
  std::vector<std::vector<std::size_t>> marks;

  void init(int r) {
    stack.assign(static_cast<std::size_t>(r - 1), {});
    present.assign(static_cast<std::size_t>(r - 1), {});
    marks.clear();
  }

  bool known(std::size_t upto_layer, std::uint64_t m) const {
    for (std::size_t j = 0; j <= upto_layer; ++j)
      if (present[j].count(m)) return true;
    return false;
  }

  void add(std::uint64_t c, std::vector<std::uint64_t>& delta) {
    delta.clear();
    marks.emplace_back(stack.size());
    auto& mark = marks.back();
    for (std::size_t j = 0; j < stack.size(); ++j) mark[j] = stack[j].size();
    for (std::size_t j = stack.size() - 1; j >= 1; --j) {
      for (std::size_t idx = 0; idx < mark[j - 1]; ++idx) {
        std::uint64_t m = stack[j - 1][idx] & c;
        if (!known(j, m)) {
          stack[j].push_back(m);
          present[j].insert(m);
          delta.push_back(m);
        }
      }
      if (j == 1) break;
    }
    if (!known(0, c)) {
      stack[0].push_back(c);
      present[0].insert(c);
      delta.push_back(c);
    }
  }

  void undo() {
    const auto& mark = marks.back();
    for (std::size_t j = 0; j < stack.size(); ++j) {
      while (stack[j].size() > mark[j]) {
        present[j].erase(stack[j].back());
        stack[j].pop_back();
      }
    }
    marks.pop_back();
  }
};

struct Designated {
  int idx;            // -1 when the set lies outside the searched universe
  std::uint64_t cap;  // family-size cap once the set is excluded for good
};

struct WorkerResult {
  std::uint64_t best = 0;
  std::vector<int> best_idx;
  bool improved = false;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::uint64_t open_bound = 0;
};

struct Worker {
  const Universe* U = nullptr;
  int t = 1;
  bool need_nontrivial = false;
  bool exhaustive = false;
  std::uint64_t budget = 0;
  const std::vector<Designated>* designated = nullptr;

  std::uint64_t best = 0;
  std::vector<int> best_idx;
  bool improved = false;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::uint64_t open_bound = 0;

  Layers layers;
  std::vector<int> fam;
  std::vector<std::uint64_t> inter_stack;
  std::vector<std::uint8_t> in_family;
  std::vector<std::uint32_t> alive_stamp;
  std::uint32_t stamp = 0;
  std::vector<std::vector<int>> cand_pool;
  std::vector<std::vector<std::pair<int, int>>> order_pool;  // (color, index)
  std::vector<std::uint64_t> delta;
  std::vector<std::uint64_t> color_pool, color_avail;
  std::vector<int> alive_scratch;

  bool qualifies() const {
    if (fam.empty()) return false;
    if (!need_nontrivial) return true;
    return std::popcount(inter_stack.back()) < t;
  }

  void record() {
    if (qualifies() && fam.size() > best) {
      best = fam.size();
      best_idx = fam;
      improved = true;
    }
  }

  /// Greedy partition of `alive` into pairwise-conflicting classes. Returns
  /// the class count; when `order` is non-null it also emits the candidates
  /// sorted by (class number asc, index asc) with their class numbers, which
  /// drives the color-cutoff branching.
  std::uint64_t color_classes(const std::vector<int>& alive,
                              std::vector<std::pair<int, int>>* order) {
    const std::size_t W = U->words;
    std::fill(color_pool.begin(), color_pool.end(), 0);
    for (int v : alive)
      color_pool[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    if (order != nullptr) {
      order->clear();
      order->reserve(alive.size());
    }
    std::uint64_t classes = 0;
    for (std::size_t w = 0; w < W; ++w) {
      while (color_pool[w] != 0) {
        ++classes;
        const int v = static_cast<int>(w * 64) + std::countr_zero(color_pool[w]);
        color_pool[w] &= color_pool[w] - 1;
        if (order != nullptr) order->emplace_back(static_cast<int>(classes), v);
        // A color class must be pairwise conflicting; grow it greedily.
        const std::uint64_t* rv = U->row(static_cast<std::size_t>(v));
        for (std::size_t u = 0; u < W; ++u) color_avail[u] = color_pool[u] & rv[u];
        for (std::size_t u = 0; u < W; ++u) {
          while (color_avail[u] != 0) {
            const int x = static_cast<int>(u * 64) + std::countr_zero(color_avail[u]);
            color_avail[u] &= color_avail[u] - 1;
            color_pool[static_cast<std::size_t>(x) / 64] &= ~(std::uint64_t{1} << (x % 64));
            if (order != nullptr) order->emplace_back(static_cast<int>(classes), x);
            const std::uint64_t* rx = U->row(static_cast<std::size_t>(x));
            for (std::size_t z = 0; z < W; ++z) color_avail[z] &= rx[z];
          }
        }
      }
    }
    if (order != nullptr) std::sort(order->begin(), order->end());
    return classes;
  }

  bool cover_satisfied(int cov_idx) const {
    return in_family[static_cast<std::size_t>(cov_idx)] != 0 ||
           alive_stamp[static_cast<std::size_t>(cov_idx)] == stamp;
  }

  /// Candidates whose closure chains are still intact; `cand` is ascending in
  /// branching order, so covers are classified before their dependants.
  const std::vector<int>& compute_alive(const std::vector<int>& cand) {
    if (U->closure == Closure::none) return cand;
    alive_scratch.clear();
    ++stamp;
    for (int c : cand) {
      bool ok = true;
      if (U->closure == Closure::down_shift) {
        for (int cov : U->covers[static_cast<std::size_t>(c)])
          if (!cover_satisfied(cov)) {
            ok = false;
            break;
          }
      } else {
        const std::uint64_t m = U->masks[static_cast<std::size_t>(c)];
        std::uint64_t absent = SubsetMask::full(U->n).bits() & ~m;
        for (std::uint64_t rest = absent; rest != 0 && ok; rest &= rest - 1) {
          int x = std::countr_zero(rest) + 1;
          int cov = U->index_table[m | (std::uint64_t{1} << (x - 1))];
          if (cov < 0 || !cover_satisfied(cov)) ok = false;
        }
      }
      if (ok) {
        alive_stamp[static_cast<std::size_t>(c)] = stamp;
        alive_scratch.push_back(c);
      }
    }
    return alive_scratch;
  }

  bool covers_in_family(int c) const {
    if (U->closure == Closure::down_shift) {
      for (int cov : U->covers[static_cast<std::size_t>(c)])
        if (!in_family[static_cast<std::size_t>(cov)]) return false;
      return true;
    }
    const std::uint64_t m = U->masks[static_cast<std::size_t>(c)];
    std::uint64_t absent = SubsetMask::full(U->n).bits() & ~m;
    for (std::uint64_t rest = absent; rest != 0; rest &= rest - 1) {
      int x = std::countr_zero(rest) + 1;
      int cov = U->index_table[m | (std::uint64_t{1} << (x - 1))];
      if (cov < 0 || !in_family[static_cast<std::size_t>(cov)]) return false;
    }
    return true;
  }

  bool delta_compatible(std::uint64_t other) const {
    for (std::uint64_t d : delta)
      if (std::popcount(d & other) < t) return false;
    return true;
  }

  void push_member(int c) {
    layers.add(U->masks[static_cast<std::size_t>(c)], delta);
    fam.push_back(c);
    in_family[static_cast<std::size_t>(c)] = 1;
    inter_stack.push_back(inter_stack.back() & U->masks[static_cast<std::size_t>(c)]);
  }

  void pop_member(int c) {
    inter_stack.pop_back();
    in_family[static_cast<std::size_t>(c)] = 0;
    fam.pop_back();
    layers.undo();
  }

  /// Color-cutoff branching for the unconstrained space: candidates are
  /// branched from the highest greedy color down, and a whole node closes as
  /// soon as the color of the next candidate cannot beat the incumbent.
  void rec_color_cutoff(std::size_t depth, int shard, int nshards) {
    const std::vector<int>& cand = cand_pool[depth];
    auto& order = order_pool[depth];
    const std::uint64_t classes = color_classes(cand, &order);
    if (fam.size() + classes <= best) return;
    auto& child = cand_pool[depth + 1];
    for (std::size_t pos = order.size(); pos-- > 0;) {
      if (budget_hit) {
        open_bound = std::max<std::uint64_t>(open_bound, fam.size() + pos + 1);
        return;
      }
      const auto [color, c] = order[pos];
      if (fam.size() + static_cast<std::uint64_t>(color) <= best) return;
      if (depth == 0 && nshards > 1 &&
          static_cast<int>(pos % static_cast<std::size_t>(nshards)) != shard)
        continue;
      push_member(c);
      child.clear();
      for (std::size_t q = 0; q < pos; ++q)
        if (delta_compatible(U->masks[static_cast<std::size_t>(order[q].second)]))
          child.push_back(order[q].second);
      rec(depth + 1, shard, nshards);
      pop_member(c);
    }
  }

  /// Lexicographic take-first branching: used by the exhaustive proof mode
  /// (which needs lex order for the lex-minimal witness) and by the closure
  /// modes (where covers must be decided before their dependants).
  void rec_lex(std::size_t depth, int shard, int nshards) {
    const std::vector<int>& cand = cand_pool[depth];
    if (!exhaustive) {
      const std::vector<int>& alive = compute_alive(cand);
      std::uint64_t ub = alive.size();
      if (U->has_conflict && fam.size() + ub > best)
        ub = std::min(ub, color_classes(alive, nullptr));
      std::uint64_t bound = fam.size() + ub;
      if (designated != nullptr) {
        for (const Designated& d : *designated) {
          const bool excluded =
              d.idx < 0 || (!in_family[static_cast<std::size_t>(d.idx)] &&
                            alive_stamp[static_cast<std::size_t>(d.idx)] != stamp);
          if (excluded) bound = std::min(bound, d.cap);
        }
      }
      if (bound <= best) return;
    }
    auto& child = cand_pool[depth + 1];
    for (std::size_t pos = 0; pos < cand.size(); ++pos) {
      if (depth == 0 && nshards > 1 &&
          static_cast<int>(pos % static_cast<std::size_t>(nshards)) != shard)
        continue;
      if (budget_hit) {
        open_bound = std::max<std::uint64_t>(open_bound, fam.size() + (cand.size() - pos));
        return;
      }
      if (!exhaustive && fam.size() + (cand.size() - pos) <= best) break;
      const int c = cand[pos];
      if (U->closure != Closure::none && !covers_in_family(c)) continue;
      push_member(c);
      child.clear();
      for (std::size_t q = pos + 1; q < cand.size(); ++q)
        if (delta_compatible(U->masks[static_cast<std::size_t>(cand[q])]))
          child.push_back(cand[q]);
      rec(depth + 1, shard, nshards);
      pop_member(c);
    }
  }

  void rec(std::size_t depth, int shard, int nshards) {
    if (++nodes > budget) {
      budget_hit = true;
      open_bound = std::max<std::uint64_t>(open_bound, fam.size() + cand_pool[depth].size());
      return;
    }
    record();
    if (cand_pool[depth].empty()) return;
    if (need_nontrivial && !exhaustive) {
      // Every completion keeps at least inter & AND(candidates) in common;
      // once that carries t elements the subtree holds only trivial families.
      std::uint64_t common = inter_stack.back();
      for (int c : cand_pool[depth]) common &= U->masks[static_cast<std::size_t>(c)];
      if (std::popcount(common) >= t) return;
    }
    if (!exhaustive && U->closure == Closure::none && U->has_conflict)
      rec_color_cutoff(depth, shard, nshards);
    else
      rec_lex(depth, shard, nshards);
  }

  WorkerResult run(int shard, int nshards, std::uint64_t seed_best) {
    const std::size_t m = U->masks.size();
    layers.init(U->r);
    in_family.assign(m, 0);
    alive_stamp.assign(m, 0);
    inter_stack.assign(1, ~std::uint64_t{0});
    if (U->has_conflict) {
      color_pool.assign(U->words, 0);
      color_avail.assign(U->words, 0);
    }
    best = seed_best;
    // Depth can reach the family size; size the pools once so recursion never
    // reallocates the outer vectors while parents hold references into them.
    cand_pool.assign(m + 2, {});
    order_pool.assign(m + 2, {});
    auto& root = cand_pool[0];
    root.resize(m);
    for (std::size_t i = 0; i < m; ++i) root[i] = static_cast<int>(i);
    rec(0, shard, nshards);
    return WorkerResult{best, best_idx, improved, nodes, budget_hit, open_bound};
  }
};

struct Seed {
  std::uint64_t size = 0;
  SetFamily family{0};
};

bool family_is_feasible(const SetFamily& f, int r, int t, bool need_nontrivial) {
  if (f.empty()) return false;
  if (!is_rwise_t_intersecting(f, IntersectSpec{r, t})) return false;
  return !need_nontrivial || is_nontrivial(f, t);
}

Seed best_uniform_seed(int n, int k, int r, int t, bool need_nontrivial) {
  Seed seed;
  std::vector<SetFamily> candidates;
  if (!need_nontrivial && k >= t && n >= k) {
    SubsetMask kernel = SubsetMask::from_bits(n, prefix_bits(n, t));
    candidates.push_back(build_star(n, k, kernel));
  }
  const int s = t + r;
  if (n > k && k >= s - 1) candidates.push_back(build_A(n, k, s));
  if (s <= k + 1 && n >= k + 1) candidates.push_back(build_B(n, k, s));
  for (SetFamily& f : candidates) {
    if (f.size() <= seed.size) continue;
    if (family_is_feasible(f, r, t, need_nontrivial)) seed = Seed{f.size(), std::move(f)};
  }
  return seed;
}

Seed best_nonuniform_seed(int n, int r, int t) {
  Seed seed;
  for (int s = 0; t + static_cast<long long>(r) * s <= n; ++s) {
    SetFamily f = build_Bs(n, r, t, s);
    if (f.size() <= seed.size) continue;
    // r members each missing at most s elements of [t+rs] jointly keep >= t.
    bool ok = true;
    const std::uint64_t window = prefix_bits(n, t + r * s);
    for (const SubsetMask& m : f.members())
      if (std::popcount(window & ~m.bits()) > s) {
        ok = false;
        break;
      }
    if (ok) seed = Seed{f.size(), std::move(f)};
  }
  return seed;
}

SetFamily family_from_indices(const Universe& uni, const std::vector<int>& idx) {
  std::vector<SubsetMask> members;
  members.reserve(idx.size());
  for (int i : idx)
    members.push_back(SubsetMask::from_bits(uni.n, uni.masks[static_cast<std::size_t>(i)]));
  return SetFamily::of(uni.n, std::move(members));
}

std::vector<Designated> designated_sets(const Universe& uni, int n, int k) {
  std::unordered_map<std::uint64_t, int> index_of;
  for (std::size_t i = 0; i < uni.masks.size(); ++i) index_of[uni.masks[i]] = static_cast<int>(i);
  auto lookup = [&](std::uint64_t m) {
    auto it = index_of.find(m);
    return it == index_of.end() ? -1 : it->second;
  };
  std::vector<Designated> out;
  for (int p = 0; p <= k - 1; ++p) {
    if (2 * k - p > n) continue;
    std::uint64_t m = prefix_bits(n, p);
    for (int e = p + 2; e <= 2 * k - p; e += 2) m |= std::uint64_t{1} << (e - 1);
    out.push_back({lookup(m), frankl_bound_values(n, k, p).first.convert_to<std::uint64_t>()});
  }
  for (int p = 2; p <= k - 1; ++p) {
    if (p + 2 * k - 2 > n) continue;
    std::uint64_t m = 0;
    for (int e = p; e <= p + 2 * k - 2; e += 2) m |= std::uint64_t{1} << (e - 1);
    out.push_back({lookup(m), frankl_bound_values(n, k, p).second->convert_to<std::uint64_t>()});
  }
  return out;
}

SearchOutcome run_engine(Universe&& uni, Seed&& seed, bool need_nontrivial,
                         const SearchOptions& opts, const std::string& infeasible_note) {
  auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.proof = opts.exhaustive ? ProofKind::exhaustive : ProofKind::branch_bound;

  const std::uint64_t budget = opts.node_budget != 0 ? opts.node_budget : default_node_budget();
  std::vector<Designated> designated;
  if (!opts.exhaustive && uni.closure == Closure::down_shift && !uni.masks.empty())
    designated = designated_sets(uni, uni.n, std::popcount(uni.masks.front()));

  const std::uint64_t seed_best = opts.exhaustive ? 0 : seed.size;
  const int threads = opts.exhaustive ? 1 : std::max(1, opts.threads);

  auto make_worker = [&]() {
    Worker w;
    w.U = &uni;
    w.t = uni.t;
    w.need_nontrivial = need_nontrivial;
    w.exhaustive = opts.exhaustive;
    w.budget = budget;
    w.designated = designated.empty() ? nullptr : &designated;
    return w;
  };

  std::vector<WorkerResult> results;
  if (threads == 1) {
    Worker w = make_worker();
    results.push_back(w.run(0, 1, seed_best));
  } else {
    std::vector<std::future<WorkerResult>> futs;
    for (int s = 0; s < threads; ++s)
      futs.push_back(std::async(std::launch::async, [&, s] {
        Worker w = make_worker();
        return w.run(s, threads, seed_best);
      }));
    for (auto& f : futs) results.push_back(f.get());
  }

  std::uint64_t best = seed_best;
  const std::vector<int>* best_idx = nullptr;
  bool budget_hit = false;
  std::uint64_t open_bound = 0;
  std::uint64_t nodes = 0;
  for (const WorkerResult& r : results) {
    nodes += r.nodes;
    budget_hit = budget_hit || r.budget_hit;
    open_bound = std::max(open_bound, r.open_bound);
    if (r.improved && r.best > best) {
      best = r.best;
      best_idx = &r.best_idx;
    }
  }

  out.nodes_explored = nodes;
  out.exact = !budget_hit;
  out.optimum = best;
  if (best_idx != nullptr)
    out.witness = family_from_indices(uni, *best_idx);
  else if (!opts.exhaustive && seed.size > 0 && seed.size == best)
    out.witness = seed.family;
  else
    out.witness = SetFamily(uni.n);
  out.upper_bound = out.exact ? out.optimum : ExactInt(std::max(best, open_bound));
  out.witness_lex_minimal = opts.exhaustive && out.exact;
  if (best == 0 && !infeasible_note.empty()) out.note = infeasible_note;
  if (budget_hit) out.note = "node budget exceeded; true optimum lies in [optimum, upper_bound]";
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SearchOutcome solve_uniform(int n, int k, int r, int t, bool need_nontrivial,
                            const SearchOptions& opts) {
  if (n < 0 || n > SubsetMask::max_ground || k < 0 || k > n)
    throw parameter_error("search: need 0 <= k <= n <= 64");
  if (r < 2 || t < 1) throw parameter_error("search: need r >= 2, t >= 1");
  if (opts.assume_shifted && need_nontrivial && !(n >= 2 * k - t))
    throw parameter_error(
        "assume-shifted for the non-trivial maximum is only sound for n >= 2k-t");

  SearchOutcome out;
  out.proof = opts.exhaustive ? ProofKind::exhaustive : ProofKind::branch_bound;
  if (k < t) {
    out.note = "no single k-set meets the threshold; the empty family is optimal";
    out.witness = SetFamily(n);
    return out;
  }

  const std::uint64_t universe_size = binom64(n, k);
  Seed seed = best_uniform_seed(n, k, r, t, need_nontrivial);
  const std::uint64_t budget = opts.node_budget != 0 ? opts.node_budget : default_node_budget();
  if (universe_size > kMaxUniverse || universe_size > budget) {
    out.exact = false;
    out.optimum = seed.size;
    out.witness = seed.size > 0 ? seed.family : SetFamily(n);
    out.upper_bound = binom(n, k);
    out.note = "C(n,k) exceeds the node budget; reporting the best construction only";
    out.proof = ProofKind::branch_bound;
    return out;
  }

  Universe uni;
  uni.n = n;
  uni.r = r;
  uni.t = t;
  const bool shifted = opts.assume_shifted && !opts.exhaustive;
  uni.closure = shifted ? Closure::down_shift : Closure::none;
  for_each_ksubset(n, k, [&](const SubsetMask& m) {
    if (!shifted || admissible_in_shifted(m.bits(), r, t)) uni.masks.push_back(m.bits());
  });
  uni.build_closure_structure();
  uni.build_conflicts();

  std::string note = need_nontrivial ? "no non-trivial r-wise t-intersecting family exists" : "";
  return run_engine(std::move(uni), std::move(seed), need_nontrivial, opts, note);
}

}  // namespace

SearchOutcome solve_g(int n, int k, int r, int t, const SearchOptions& opts) {
  return solve_uniform(n, k, r, t, /*need_nontrivial=*/false, opts);
}

SearchOutcome solve_h(int n, int k, int r, int t, const SearchOptions& opts) {
  return solve_uniform(n, k, r, t, /*need_nontrivial=*/true, opts);
}

SearchOutcome solve_g_nonuniform(int n, int r, int t, const SearchOptions& opts) {
  if (n < 1 || n > 20) throw parameter_error("solve_g_nonuniform: need 1 <= n <= 20");
  if (r < 2 || t < 1) throw parameter_error("solve_g_nonuniform: need r >= 2, t >= 1");
  SearchOutcome out;
  if (t > n) {
    out.note = "threshold exceeds ground set; the empty family is optimal";
    out.witness = SetFamily(n);
    return out;
  }
  Universe uni;
  uni.n = n;
  uni.r = r;
  uni.t = t;
  uni.closure = opts.exhaustive ? Closure::none : Closure::up_superset;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::pair<int, std::uint64_t>> ordered;
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (std::popcount(bits) >= t) ordered.emplace_back(-std::popcount(bits), bits);
  std::sort(ordered.begin(), ordered.end());
  uni.masks.reserve(ordered.size());
  for (const auto& entry : ordered) uni.masks.push_back(entry.second);
  uni.build_closure_structure();
  uni.build_conflicts();
  Seed seed = best_nonuniform_seed(n, r, t);
  return run_engine(std::move(uni), std::move(seed), /*need_nontrivial=*/false, opts, "");
}

SearchOutcome solve_cross_sum(int n, int k, int m, int t, const SearchOptions& opts) {
  if (m < 2) throw parameter_error("solve_cross_sum: m >= 2 families required");
  if (t < 1) throw parameter_error("solve_cross_sum: t >= 1");
  if (n < 0 || n > SubsetMask::max_ground || k < 0 || k > n)
    throw parameter_error("solve_cross_sum: need 0 <= k <= n <= 64");
  auto t0 = std::chrono::steady_clock::now();

  SearchOutcome out;
  out.proof = ProofKind::exhaustive;
  const std::uint64_t universe_size = binom64(n, k);
  if (universe_size > 24 || m > 4) {
    out.exact = false;
    out.upper_bound = ExactInt(m) * binom(n, k);
    out.note = "instance too large for exhaustive cross-sum enumeration";
    return out;
  }
  const int M = static_cast<int>(universe_size);
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<std::size_t>(M));
  for_each_ksubset(n, k, [&](const SubsetMask& sm) { masks.push_back(sm.bits()); });
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(M), 0);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      if (std::popcount(masks[static_cast<std::size_t>(i)] &
                        masks[static_cast<std::size_t>(j)]) >= t)
        adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

  const std::uint32_t full =
      M >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << M) - 1;
  const std::uint64_t budget = opts.node_budget != 0 ? opts.node_budget : default_node_budget();

  std::uint64_t best = 0;
  std::vector<std::uint32_t> best_tuple;
  std::vector<std::uint32_t> chosen(static_cast<std::size_t>(m), 0);
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  auto compat_of = [&](std::uint32_t family, std::uint32_t base) {
    std::uint32_t c = base;
    for (std::uint32_t rest = family; rest != 0; rest &= rest - 1)
      c &= adj[static_cast<std::size_t>(std::countr_zero(rest))];
    return c;
  };

  // The last family is determined: the full compatibility set of the others.
  std::function<void(int, std::uint32_t, std::uint64_t)> walk =
      [&](int level, std::uint32_t compat, std::uint64_t sum) {
        if (++nodes > budget) {
          budget_hit = true;
          return;
        }
        if (level == m - 1) {
          const std::uint64_t total_sum =
              sum + static_cast<std::uint64_t>(std::popcount(compat));
          if (total_sum > best) {
            best = total_sum;
            chosen[static_cast<std::size_t>(m - 1)] = compat;
            best_tuple = chosen;
          }
          return;
        }
        if (sum + static_cast<std::uint64_t>(m - level) *
                      static_cast<std::uint64_t>(std::popcount(compat)) <=
            best)
          return;
        std::uint32_t sub = compat;
        while (true) {
          chosen[static_cast<std::size_t>(level)] = sub;
          walk(level + 1, compat_of(sub, compat),
               sum + static_cast<std::uint64_t>(std::popcount(sub)));
          if (budget_hit) return;
          if (sub == 0) break;
          sub = (sub - 1) & compat;
        }
      };
  walk(0, full, 0);

  out.nodes_explored = nodes;
  out.exact = !budget_hit;
  out.optimum = best;
  out.upper_bound = out.exact ? out.optimum : ExactInt(m) * binom(n, k);
  if (budget_hit) out.note = "node budget exceeded during cross-sum enumeration";
  for (std::uint32_t fambits : best_tuple) {
    std::vector<SubsetMask> members;
    for (std::uint32_t rest = fambits; rest != 0; rest &= rest - 1)
      members.push_back(SubsetMask::from_bits(
          n, masks[static_cast<std::size_t>(std::countr_zero(rest))]));
    out.witnesses.push_back(SetFamily::of(n, std::move(members), k));
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SearchOutcome solve(const SearchProblem& p, const SearchOptions& opts) {
  switch (p.mode) {
    case SearchMode::g:
      return solve_g(p.n, p.k, p.spec.r, p.spec.t, opts);
    case SearchMode::h:
      return solve_h(p.n, p.k, p.spec.r, p.spec.t, opts);
    case SearchMode::cross_sum:
      return solve_cross_sum(p.n, p.k, p.m, p.cross_t, opts);
  }
  throw parameter_error("solve: unknown mode");
}

}  // namespace extremal
