#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skyline/core.hpp"

namespace skyline {

/// Candidate skyline list of the nested-loop family. Members are pairwise
/// non-dominating at all times; capacity is unbounded.
class Window {
 public:
  const std::vector<TupleId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// BNL step: drops t on its first dominator, otherwise evicts the members
  /// t dominates and appends t. Returns whether t was inserted.
  bool offer(const Dataset& data, TupleId t, DominanceCounter& counter);

  /// SFS step for presorted input: no later tuple can dominate an earlier
  /// one, so only the "is t dominated" direction is tested.
  bool offer_presorted(const Dataset& data, TupleId t,
                       DominanceCounter& counter);

  /// O(|W|^2) check that no member dominates another (uncounted).
  bool pairwise_non_dominating(const Dataset& data) const;

 private:
  std::vector<TupleId> members_;
};

SkylineResult run_bnl(const Dataset& data, RunStats& stats);

/// Tuples normalized per dimension to smaller-is-better values in [0,1]
/// (min-max over the oriented values; constant dimensions map to 0).
std::vector<Value> normalized_values(const Dataset& data);

/// SFS presort: ascending E(t) = sum_i ln(1 + v_i) over normalized values,
/// ties by oriented values lexicographically, then id.
std::vector<TupleId> sfs_order(const Dataset& data);

SkylineResult run_sfs(const Dataset& data, const std::vector<TupleId>& order,
                      RunStats& stats);
SkylineResult run_sfs(const Dataset& data, RunStats& stats);

enum class SalsaKey : std::uint8_t {
  min_coordinate,  // min_i v_i, ties by sum_i v_i
  max_coordinate,  // max_i v_i, ties by sum_i v_i
  sum,             // sum_i v_i
};

struct SalsaPlan {
  std::vector<TupleId> order;
  /// max over the stop point's normalized values must be strictly below
  /// suffix_min_coordinate[k] (the smallest coordinate among the tuples
  /// still unread at position k) for the scan to stop before k.
  std::vector<Value> suffix_min_coordinate;
  std::vector<Value> max_coordinate;  // per tuple id
};

SalsaPlan salsa_plan(const Dataset& data, SalsaKey key = SalsaKey::min_coordinate);

struct SalsaOptions {
  SalsaKey key = SalsaKey::min_coordinate;
  bool use_stop_point = true;
};

SkylineResult run_salsa(const Dataset& data, const SalsaPlan& plan,
                        bool use_stop_point, RunStats& stats);
SkylineResult run_salsa(const Dataset& data, const SalsaOptions& options,
                        RunStats& stats);

class OracleRefused : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kOracleDefaultLimit = 10'000;

/// All-pairs skyline by the literal definition. Shares no code with the
/// dominance routines above so it can serve as ground truth. Each ordered
/// pair tested is counted in `pairs_tested` when given.
SkylineResult run_oracle(const Dataset& data,
                         std::size_t max_n = kOracleDefaultLimit,
                         DominanceCounter* pairs_tested = nullptr);

const char* to_string(SalsaKey key);

}  // namespace skyline
