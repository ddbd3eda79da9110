#include "extremal/shifting.hpp"

#include <nlohmann/json.hpp>

namespace extremal {

nlohmann::json ShiftLog::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Entry& e : entries)
    arr.push_back({{"i", e.i}, {"j", e.j}, {"moved", e.moved}});
  return arr;
}

std::pair<SetFamily, std::size_t> apply_shift_counting(const SetFamily& f, int i, int j) {
  if (!(1 <= i && i < j && j <= f.ground_size()))
    throw parameter_error("apply_shift: need 1 <= i < j <= n");
  std::vector<SubsetMask> out;
  out.reserve(f.size());
  std::size_t moved = 0;
  for (const SubsetMask& m : f.members()) {
    if (m.contains(j) && !m.contains(i)) {
      SubsetMask target = m.without(j).with(i);
      if (!f.contains(target)) {
        out.push_back(target);
        ++moved;
        continue;
      }
    }
    out.push_back(m);
  }
  return {SetFamily::of(f.ground_size(), std::move(out), f.uniform_k()), moved};
}

SetFamily apply_shift(const SetFamily& f, int i, int j) {
  return apply_shift_counting(f, i, j).first;
}

std::pair<SetFamily, ShiftLog> shift_to_fixpoint(const SetFamily& f) {
  SetFamily cur = f;
  ShiftLog log;
  const int n = f.ground_size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        auto [next, moved] = apply_shift_counting(cur, i, j);
        if (moved > 0) {
          log.entries.push_back({i, j, moved});
          cur = std::move(next);
          changed = true;
        }
      }
    }
  }
  return {std::move(cur), std::move(log)};
}

SetFamily replay_shift_log(const SetFamily& f, const ShiftLog& log) {
  SetFamily cur = f;
  for (const ShiftLog::Entry& e : log.entries) cur = apply_shift(cur, e.i, e.j);
  return cur;
}

bool is_shifted(const SetFamily& f) {
  const int n = f.ground_size();
  for (const SubsetMask& m : f.members()) {
    std::uint64_t absent = SubsetMask::full(n).bits() & ~m.bits();
    for (std::uint64_t rest = m.bits(); rest != 0; rest &= rest - 1) {
      int j = std::countr_zero(rest) + 1;
      std::uint64_t lower = absent & (prefix_bits(n, j - 1));
      for (std::uint64_t lo = lower; lo != 0; lo &= lo - 1) {
        int i = std::countr_zero(lo) + 1;
        if (!f.contains(m.without(j).with(i))) return false;
      }
    }
  }
  return true;
}

bool check_down_closure(const SetFamily& f) {
  if (!f.uniform_k())
    throw precondition_error("check_down_closure: family must be k-uniform");
  for (const SubsetMask& m : f.members()) {
    for (int e : m.elements()) {
      if (e > 1 && !m.contains(e - 1)) {
        if (!f.contains(m.without(e).with(e - 1))) return false;
      }
    }
  }
  return true;
}

GuardedShiftResult guarded_shift_nontrivial(const SetFamily& f, const IntersectSpec& spec) {
  if (f.empty() || !is_rwise_t_intersecting(f, spec) || !is_nontrivial(f, spec.t))
    throw precondition_error(
        "guarded_shift_nontrivial: input must be non-trivial r-wise t-intersecting");
  GuardedShiftResult result{f, {}, {}, false};
  const int n = f.ground_size();
  bool changed = true;
  while (changed) {
    changed = false;
    result.blocked.clear();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        auto [next, moved] = apply_shift_counting(result.family, i, j);
        if (moved == 0) continue;
        if (!is_nontrivial(next, spec.t)) {
          result.blocked.emplace_back(i, j);
          continue;
        }
        result.log.entries.push_back({i, j, moved});
        result.family = std::move(next);
        changed = true;
      }
    }
  }
  result.shifted = is_shifted(result.family);
  return result;
}

}  // namespace extremal
