#pragma once

// Skyline on dimensional indexes: range-bounded confirmation, stop-line
// termination and breadth/depth-first dimension switching (SDI-RS).

#include <cstdint>
#include <optional>
#include <vector>

#include "skyline/core.hpp"
#include "skyline/index.hpp"

namespace skyline::sdi {

enum class Switching : std::uint8_t { bfs, dfs };

/// Marks only move unseen -> dominated or unseen -> skyline.
enum class TupleStatus : std::uint8_t { unseen, dominated, skyline };

/// Progress of one SDI-RS run: the global skyline S in discovery order, the
/// per-dimension range sets S_i, per-tuple marks and per-dimension cursors
/// (offset of the next block to fetch).
///
/// Invariant kept by the operations below: S_i holds exactly the skyline
/// tuples whose block in I_i lies before cursor(i).
class SkylineState {
 public:
  SkylineState(std::size_t n, Dim d);

  TupleStatus status(TupleId id) const { return status_[id]; }
  const std::vector<TupleId>& skyline() const { return skyline_; }
  const std::vector<TupleId>& range(Dim dim) const { return ranges_[dim]; }
  bool in_range(Dim dim, TupleId id) const { return in_range_[dim][id]; }
  std::size_t cursor(Dim dim) const { return cursors_[dim]; }
  Dim dims() const { return cursors_.size(); }

  std::optional<Block> next_block(const DimensionalIndex& index);

  void mark_dominated(TupleId id);
  void mark_skyline(TupleId id);
  void append_range(Dim dim, TupleId id);

 private:
  std::vector<TupleStatus> status_;
  std::vector<TupleId> skyline_;
  std::vector<std::vector<TupleId>> ranges_;
  std::vector<std::vector<bool>> in_range_;
  std::vector<std::size_t> cursors_;
};

/// Block offsets of one skyline tuple in every index, ranked by
/// (max offset, mean offset). The mean is compared through the offset sum,
/// which orders identically for a fixed d.
struct StopLine {
  TupleId owner = 0;
  std::vector<std::size_t> block_offsets;
  std::size_t max_offset = 0;
  std::size_t offset_sum = 0;

  static StopLine from(TupleId owner, const IndexSet& indexes);

  double mean_offset() const {
    return block_offsets.empty()
               ? 0.0
               : static_cast<double>(offset_sum) / block_offsets.size();
  }
  /// Strictly smaller quality key.
  bool better_than(const StopLine& other) const {
    if (max_offset != other.max_offset) return max_offset < other.max_offset;
    return offset_sum < other.offset_sum;
  }
};

/// Hooks into a run. Used for the trace stream and for invariant checks.
class Observer {
 public:
  virtual ~Observer() = default;
  virtual void block_traversed(Dim /*dim*/, std::size_t /*offset*/,
                               Block /*block*/) {}
  /// Called right before `t` is range-checked against S_dim.
  virtual void before_confirm(TupleId /*t*/, Dim /*dim*/,
                              const SkylineState& /*state*/) {}
  virtual void tuple_confirmed(TupleId /*t*/, Dim /*dim*/,
                               std::size_t /*offset*/) {}
  virtual void tuple_rejected(TupleId /*t*/, Dim /*dim*/,
                              std::size_t /*offset*/) {}
  virtual void stop_line_updated(const StopLine& /*line*/, Dim /*dim*/,
                                 std::size_t /*offset*/) {}
  virtual void stopped(Dim /*dim*/, std::size_t /*offset*/,
                       bool /*by_stop_line*/) {}
};

/// BNL over the members of one block that are not already marked dominated.
/// Known skyline members stay in the window so they can knock out new ones.
/// Members that lose inside the block are marked dominated and, when
/// `rejected` is given, appended to it. Singleton blocks cost nothing.
std::vector<TupleId> block_skyline(Block block, SkylineState& state,
                                   const Dataset& data,
                                   DominanceCounter& counter,
                                   std::vector<TupleId>* rejected = nullptr);

/// Range check of a block-skyline tuple of the block just fetched from
/// I_dim: t is a skyline tuple iff nothing in S_dim from an earlier block
/// dominates it. On success
/// t enters S and S_dim; otherwise it is marked dominated.
/// Throws std::logic_error if t does not belong to the current block of dim.
bool confirm_skyline(TupleId t, Dim dim, SkylineState& state,
                     const Dataset& data, const IndexSet& indexes,
                     DominanceCounter& counter);

/// Adds an already-confirmed skyline tuple met again in I_dim to S_dim,
/// without comparisons. No-op if it is already there.
void absorb_known_skyline(TupleId t, Dim dim, SkylineState& state);

/// Replaces `current` by the candidate's line if there is no current line or
/// the candidate's is strictly better. Returns whether the line changed.
bool update_stop_line(std::optional<StopLine>& current, TupleId candidate,
                      const IndexSet& indexes);

/// Number of (entry, dimension) pairs lying in a block strictly after the
/// line's block in that dimension.
std::size_t stop_line_coverage(const StopLine& line, const IndexSet& indexes);

/// True once every dimension's cursor has moved past the stop-line block.
bool should_stop(const SkylineState& state,
                 const std::optional<StopLine>& line);

struct Options {
  Switching switching = Switching::bfs;
  /// Disabling the stop line leaves only end-of-index termination.
  bool use_stop_line = true;
  /// Replaces the index set's cardinality-based scan order.
  std::optional<std::vector<Dim>> scan_order;
  Observer* observer = nullptr;
};

SkylineResult run_sdi_rs(const Dataset& data, const IndexSet& indexes,
                         const Options& options, RunStats& stats);
SkylineResult run_sdi_rs(const Dataset& data, Switching switching,
                         RunStats& stats);

const char* to_string(Switching switching);

}  // namespace skyline::sdi
