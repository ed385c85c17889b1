#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skyline/core.hpp"

namespace skyline {

/// One <value:id> entry of a dimensional index.
struct IndexEntry {
  Value value;
  TupleId tuple_id;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};
static_assert(sizeof(IndexEntry) == 16);

using Block = std::span<const IndexEntry>;

/// Entries of one dimension sorted best-first (ties by tuple id) and split
/// into blocks of equal value.
class DimensionalIndex {
 public:
  DimensionalIndex() = default;

  Dim dimension() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const IndexEntry> entries() const { return entries_; }

  /// Number of blocks, i.e. distinct values in this dimension.
  std::size_t block_count() const { return block_starts_.size() - 1; }
  Block block(std::size_t offset) const;
  /// Entry offset of the first entry of block `offset`; block_start(block_count())
  /// is size().
  std::size_t block_start(std::size_t offset) const {
    return block_starts_[offset];
  }

  /// Returns block `cursor` and advances the cursor, or nullopt once the
  /// cursor has reached block_count().
  std::optional<Block> next_block(std::size_t& cursor) const;

  std::size_t block_offset_of(TupleId id) const;
  std::size_t entry_offset_of(TupleId id) const;

  /// Entries sharing a block with an earlier entry (n - block_count()).
  std::size_t duplicate_count() const { return size() - block_count(); }
  std::size_t largest_block() const;

 private:
  friend DimensionalIndex build_index(const Dataset&, Dim);

  Dim dim_ = 0;
  std::vector<IndexEntry> entries_;
  std::vector<std::size_t> block_starts_{0};
  std::vector<std::uint32_t> block_of_;
  std::vector<std::uint32_t> entry_of_;
};

/// All d indexes plus the order in which SDI-RS visits them: most distinct
/// values first, ties by dimension id.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<DimensionalIndex> indexes);

  Dim dims() const { return indexes_.size(); }
  const DimensionalIndex& operator[](Dim dim) const { return indexes_[dim]; }
  const std::vector<Dim>& scan_order() const { return scan_order_; }

 private:
  std::vector<DimensionalIndex> indexes_;
  std::vector<Dim> scan_order_;
};

DimensionalIndex build_index(const Dataset& data, Dim dim);
IndexSet build_index_set(const Dataset& data);

}  // namespace skyline
