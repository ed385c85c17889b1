#include "skyline/index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace skyline {

Block DimensionalIndex::block(std::size_t offset) const {
  if (offset >= block_count()) {
    throw StructuralError("block offset " + std::to_string(offset) +
                          " out of range for index with " +
                          std::to_string(block_count()) + " blocks");
  }
  const std::size_t first = block_starts_[offset];
  return Block(entries_).subspan(first, block_starts_[offset + 1] - first);
}

std::optional<Block> DimensionalIndex::next_block(std::size_t& cursor) const {
  if (cursor >= block_count()) return std::nullopt;
  return block(cursor++);
}

std::size_t DimensionalIndex::block_offset_of(TupleId id) const {
  if (id >= block_of_.size()) {
    throw StructuralError("tuple " + std::to_string(id) +
                          " is not in the index of dimension " +
                          std::to_string(dim_));
  }
  return block_of_[id];
}

std::size_t DimensionalIndex::entry_offset_of(TupleId id) const {
  if (id >= entry_of_.size()) {
    throw StructuralError("tuple " + std::to_string(id) +
                          " is not in the index of dimension " +
                          std::to_string(dim_));
  }
  return entry_of_[id];
}

std::size_t DimensionalIndex::largest_block() const {
  std::size_t largest = 0;
  for (std::size_t b = 0; b < block_count(); ++b) {
    largest = std::max(largest, block_starts_[b + 1] - block_starts_[b]);
  }
  return largest;
}

DimensionalIndex build_index(const Dataset& data, Dim dim) {
  if (data.empty()) throw StructuralError("cannot index an empty dataset");
  if (dim >= data.dims()) {
    throw StructuralError("dimension " + std::to_string(dim) +
                          " out of range for d = " +
                          std::to_string(data.dims()));
  }
  const std::size_t n = data.size();
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw StructuralError("dataset too large to index");
  }

  DimensionalIndex index;
  index.dim_ = dim;
  index.entries_.reserve(n);
  for (TupleId id = 0; id < n; ++id) {
    index.entries_.push_back({data.value(id, dim), id});
  }
  // Oriented values put the better value first for either direction.
  std::sort(index.entries_.begin(), index.entries_.end(),
            [&](const IndexEntry& a, const IndexEntry& b) {
              const Value va = data.oriented_value(a.tuple_id, dim);
              const Value vb = data.oriented_value(b.tuple_id, dim);
              if (va != vb) return va < vb;
              return a.tuple_id < b.tuple_id;
            });

  index.block_starts_.clear();
  index.block_of_.resize(n);
  index.entry_of_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (e == 0 || index.entries_[e].value != index.entries_[e - 1].value) {
      index.block_starts_.push_back(e);
    }
    const TupleId id = index.entries_[e].tuple_id;
    index.block_of_[id] =
        static_cast<std::uint32_t>(index.block_starts_.size() - 1);
    index.entry_of_[id] = static_cast<std::uint32_t>(e);
  }
  index.block_starts_.push_back(n);
  return index;
}

IndexSet::IndexSet(std::vector<DimensionalIndex> indexes)
    : indexes_(std::move(indexes)), scan_order_(indexes_.size()) {
  std::iota(scan_order_.begin(), scan_order_.end(), Dim{0});
  std::stable_sort(scan_order_.begin(), scan_order_.end(),
                   [this](Dim a, Dim b) {
                     return indexes_[a].block_count() >
                            indexes_[b].block_count();
                   });
}

IndexSet build_index_set(const Dataset& data) {
  if (data.empty()) throw StructuralError("cannot index an empty dataset");
  std::vector<DimensionalIndex> indexes;
  indexes.reserve(data.dims());
  for (Dim i = 0; i < data.dims(); ++i) indexes.push_back(build_index(data, i));
  return IndexSet(std::move(indexes));
}

}  // namespace skyline
