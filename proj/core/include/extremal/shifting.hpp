#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "extremal/family.hpp"

namespace extremal {

/// Record of the effective (i,j)-shift applications of a compression run.
struct ShiftLog {
  struct Entry {
    int i;
    int j;
    std::size_t moved;
  };
  std::vector<Entry> entries;

  nlohmann::json to_json() const;
};

/// One application of the (i,j)-shift: each member containing j but not i is
/// replaced by (F \ {j}) u {i} unless that target already belongs to the
/// family. Two-phase, so every member is judged against the input family.
SetFamily apply_shift(const SetFamily& f, int i, int j);

/// apply_shift plus the number of members that actually moved.
std::pair<SetFamily, std::size_t> apply_shift_counting(const SetFamily& f, int i, int j);

/// Repeats lexicographic (i,j) passes until a full pass changes nothing.
/// The returned log replays to the same family.
std::pair<SetFamily, ShiftLog> shift_to_fixpoint(const SetFamily& f);

/// Re-applies a recorded log to `f` in order.
SetFamily replay_shift_log(const SetFamily& f, const ShiftLog& log);

/// True iff no (i,j)-shift changes the family.
bool is_shifted(const SetFamily& f);

/// True iff the k-uniform family is an ideal of the shifting partial order:
/// A < B and B in F imply A in F. Checked through covering predecessors.
bool check_down_closure(const SetFamily& f);

/// Result of the non-triviality-guarded compression: shifts that would
/// collapse the family onto a t-star are reported, not applied.
struct GuardedShiftResult {
  SetFamily family;
  ShiftLog log;
  std::vector<std::pair<int, int>> blocked;
  bool shifted;  // whether the output passes is_shifted
};

/// Applies (i,j)-shifts repeatedly, skipping any application whose image is
/// trivial. Precondition: f is non-trivial r-wise t-intersecting.
GuardedShiftResult guarded_shift_nontrivial(const SetFamily& f, const IntersectSpec& spec);

}  // namespace extremal
