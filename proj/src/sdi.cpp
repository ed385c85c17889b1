#include "skyline/sdi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skyline::sdi {

SkylineState::SkylineState(std::size_t n, Dim d)
    : status_(n, TupleStatus::unseen),
      ranges_(d),
      in_range_(d, std::vector<bool>(n, false)),
      cursors_(d, 0) {}

std::optional<Block> SkylineState::next_block(const DimensionalIndex& index) {
  return index.next_block(cursors_[index.dimension()]);
}

void SkylineState::mark_dominated(TupleId id) {
  if (status_[id] == TupleStatus::skyline) {
    throw std::logic_error("tuple " + std::to_string(id) +
                           " is a confirmed skyline tuple and cannot be "
                           "marked dominated");
  }
  status_[id] = TupleStatus::dominated;
}

void SkylineState::mark_skyline(TupleId id) {
  if (status_[id] != TupleStatus::unseen) {
    throw std::logic_error("tuple " + std::to_string(id) +
                           " was already decided");
  }
  status_[id] = TupleStatus::skyline;
  skyline_.push_back(id);
}

void SkylineState::append_range(Dim dim, TupleId id) {
  if (in_range_[dim][id]) return;
  in_range_[dim][id] = true;
  ranges_[dim].push_back(id);
}

std::vector<TupleId> block_skyline(Block block, SkylineState& state,
                                   const Dataset& data,
                                   DominanceCounter& counter,
                                   std::vector<TupleId>* rejected) {
  std::vector<TupleId> window;
  window.reserve(block.size());
  for (const IndexEntry& entry : block) {
    const TupleId c = entry.tuple_id;
    if (state.status(c) == TupleStatus::dominated) continue;
    const bool c_known = state.status(c) == TupleStatus::skyline;

    bool c_dominated = false;
    for (auto it = window.begin(); it != window.end();) {
      const bool w_known = state.status(*it) == TupleStatus::skyline;
      // A known skyline tuple is never dominated, so those tests are skipped.
      if (!c_known && dominates(data, *it, c, counter)) {
        c_dominated = true;
        break;
      }
      if (!w_known && dominates(data, c, *it, counter)) {
        state.mark_dominated(*it);
        if (rejected) rejected->push_back(*it);
        it = window.erase(it);
      } else {
        ++it;
      }
    }
    if (c_dominated) {
      state.mark_dominated(c);
      if (rejected) rejected->push_back(c);
    } else {
      window.push_back(c);
    }
  }
  return window;
}

bool confirm_skyline(TupleId t, Dim dim, SkylineState& state,
                     const Dataset& data, const IndexSet& indexes,
                     DominanceCounter& counter) {
  const std::size_t block = indexes[dim].block_offset_of(t);
  if (state.cursor(dim) != block + 1) {
    throw std::logic_error(
        "confirm_skyline: tuple " + std::to_string(t) + " sits in block " +
        std::to_string(block) + " of dimension " + std::to_string(dim) +
        " but the cursor is at " + std::to_string(state.cursor(dim)));
  }
  if (state.status(t) != TupleStatus::unseen) {
    throw std::logic_error("confirm_skyline: tuple " + std::to_string(t) +
                           " was already decided");
  }
  // members of t's own block form a suffix of S_dim
  for (TupleId s : state.range(dim)) {
    if (indexes[dim].block_offset_of(s) == block) break;
    if (dominates(data, s, t, counter)) {
      state.mark_dominated(t);
      return false;
    }
  }
  state.mark_skyline(t);
  state.append_range(dim, t);
  return true;
}

void absorb_known_skyline(TupleId t, Dim dim, SkylineState& state) {
  if (state.status(t) != TupleStatus::skyline) {
    throw std::logic_error("absorb_known_skyline: tuple " + std::to_string(t) +
                           " is not a confirmed skyline tuple");
  }
  state.append_range(dim, t);
}

StopLine StopLine::from(TupleId owner, const IndexSet& indexes) {
  StopLine line;
  line.owner = owner;
  line.block_offsets.reserve(indexes.dims());
  for (Dim i = 0; i < indexes.dims(); ++i) {
    const std::size_t b = indexes[i].block_offset_of(owner);
    line.block_offsets.push_back(b);
    line.max_offset = std::max(line.max_offset, b);
    line.offset_sum += b;
  }
  return line;
}

bool update_stop_line(std::optional<StopLine>& current, TupleId candidate,
                      const IndexSet& indexes) {
  StopLine line = StopLine::from(candidate, indexes);
  if (current && !line.better_than(*current)) return false;
  current = std::move(line);
  return true;
}

std::size_t stop_line_coverage(const StopLine& line, const IndexSet& indexes) {
  std::size_t covered = 0;
  for (Dim i = 0; i < indexes.dims(); ++i) {
    const DimensionalIndex& index = indexes[i];
    covered += index.size() - index.block_start(line.block_offsets[i] + 1);
  }
  return covered;
}

bool should_stop(const SkylineState& state,
                 const std::optional<StopLine>& line) {
  if (!line) return false;
  for (Dim i = 0; i < state.dims(); ++i) {
    if (state.cursor(i) <= line->block_offsets[i]) return false;
  }
  return true;
}

SkylineResult run_sdi_rs(const Dataset& data, const IndexSet& indexes,
                         const Options& options, RunStats& stats) {
  if (data.empty()) throw StructuralError("cannot run SDI-RS on empty data");
  if (indexes.dims() != data.dims()) {
    throw StructuralError("index set does not match the dataset");
  }
  Observer* const observer = options.observer;
  stats = RunStats{};
  const std::vector<Dim>& scan_order =
      options.scan_order ? *options.scan_order : indexes.scan_order();
  if (scan_order.empty() ||
      std::any_of(scan_order.begin(), scan_order.end(),
                  [&](Dim i) { return i >= data.dims(); })) {
    throw StructuralError("scan order must list valid dimensions");
  }

  SkylineState state(data.size(), data.dims());
  DominanceCounter counter;
  std::optional<StopLine> line;
  std::uint64_t line_updates = 0;
  std::vector<TupleId> rejected;

  std::size_t turn = 0;
  while (true) {
    const Dim dim = scan_order[turn];
    const DimensionalIndex& index = indexes[dim];
    const std::size_t offset = state.cursor(dim);
    const std::optional<Block> block = state.next_block(index);
    if (!block) {
      if (observer) observer->stopped(dim, offset, false);
      break;
    }
    if (observer) observer->block_traversed(dim, offset, *block);

    rejected.clear();
    const std::vector<TupleId> candidates =
        block_skyline(*block, state, data, counter, &rejected);
    if (observer) {
      for (TupleId t : rejected) observer->tuple_rejected(t, dim, offset);
    }

    std::size_t fresh = 0;
    for (TupleId t : candidates) {
      if (state.status(t) == TupleStatus::skyline) {
        absorb_known_skyline(t, dim, state);
        continue;
      }
      if (observer) observer->before_confirm(t, dim, state);
      if (!confirm_skyline(t, dim, state, data, indexes, counter)) {
        if (observer) observer->tuple_rejected(t, dim, offset);
        continue;
      }
      ++fresh;
      if (observer) observer->tuple_confirmed(t, dim, offset);
      if (options.use_stop_line && update_stop_line(line, t, indexes)) {
        ++line_updates;
        if (observer) observer->stop_line_updated(*line, dim, offset);
      }
    }

    if (state.cursor(dim) == index.block_count()) {
      if (observer) observer->stopped(dim, offset, false);
      break;
    }
    if (options.use_stop_line && should_stop(state, line)) {
      stats.early_stop = true;
      if (observer) observer->stopped(dim, offset, true);
      break;
    }
    if (options.switching == Switching::bfs || fresh == 0) {
      turn = (turn + 1) % scan_order.size();
    }
  }

  stats.dominance_comparisons = counter.count();
  stats.stop_line_updates = line_updates;
  return SkylineResult(state.skyline());
}

SkylineResult run_sdi_rs(const Dataset& data, Switching switching,
                         RunStats& stats) {
  const IndexSet indexes = build_index_set(data);
  Options options;
  options.switching = switching;
  return run_sdi_rs(data, indexes, options, stats);
}

const char* to_string(Switching switching) {
  return switching == Switching::bfs ? "BFS" : "DFS";
}

}  // namespace skyline::sdi
