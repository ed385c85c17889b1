#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace skyline {

using Value = double;
using TupleId = std::uint64_t;
using Dim = std::size_t;

/// Thrown when inputs violate a structural contract (shape mismatch, empty
/// dataset, unknown tuple id, NaN values, ...).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction : std::uint8_t { minimize, maximize };

enum class Ordering : std::int8_t { worse = -1, equal = 0, better = 1 };

/// Category token -> integer rank. Smaller ranks are better under
/// Direction::minimize.
using RankMap = std::unordered_map<std::string, std::int64_t>;

/// Per-dimension total orders. An OrderSpec with a single direction is
/// broadcast to every dimension by resolved_for(); an empty one means
/// "minimize everything".
class OrderSpec {
 public:
  OrderSpec() = default;
  explicit OrderSpec(std::vector<Direction> directions);

  static OrderSpec uniform(Dim d, Direction dir = Direction::minimize);

  /// Attach a category rank map to dimension `dim`. Throws if two tokens
  /// share a rank.
  void set_rank_map(Dim dim, RankMap map);

  Dim dims() const { return directions_.size(); }
  Direction direction(Dim dim) const { return directions_.at(dim); }
  const RankMap* rank_map(Dim dim) const;
  bool has_rank_maps() const;

  /// Expands a broadcast/empty spec to exactly d dimensions.
  OrderSpec resolved_for(Dim d) const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  std::vector<Direction> directions_;
  std::vector<std::optional<RankMap>> rank_maps_;
};

/// Counts whole-tuple dominance tests. One increment per dominates() call.
class DominanceCounter {
 public:
  void tick() { ++count_; }
  std::uint64_t count() const { return count_; }
  void reset() { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

/// Immutable n x d table of dimensional values. Tuple ids are the row
/// positions 0..n-1. Alongside the raw values the dataset keeps an oriented
/// copy in which every dimension is smaller-is-better; all dominance tests
/// run against that copy.
class Dataset {
 public:
  Dataset() = default;
  Dataset(Dim d, std::vector<Value> row_major, OrderSpec order = {});

  std::size_t size() const { return d_ == 0 ? 0 : raw_.size() / d_; }
  Dim dims() const { return d_; }
  bool empty() const { return raw_.empty(); }
  const OrderSpec& order() const { return order_; }

  std::span<const Value> row(TupleId id) const {
    return {raw_.data() + id * d_, d_};
  }
  std::span<const Value> oriented_row(TupleId id) const {
    return {oriented_.data() + id * d_, d_};
  }
  Value value(TupleId id, Dim dim) const { return raw_[id * d_ + dim]; }
  Value oriented_value(TupleId id, Dim dim) const {
    return oriented_[id * d_ + dim];
  }
  std::span<const Value> raw_values() const { return raw_; }

 private:
  Dim d_ = 0;
  std::vector<Value> raw_;
  std::vector<Value> oriented_;
  OrderSpec order_;
};

/// Skyline member ids, kept sorted ascending.
class SkylineResult {
 public:
  SkylineResult() = default;
  explicit SkylineResult(std::vector<TupleId> members);

  const std::vector<TupleId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(TupleId id) const;

  friend bool operator==(const SkylineResult&, const SkylineResult&) = default;

 private:
  std::vector<TupleId> members_;
};

/// Counters every algorithm reports.
struct RunStats {
  std::uint64_t dominance_comparisons = 0;
  std::optional<std::uint64_t> stop_line_updates;
  bool early_stop = false;
};

Ordering compare_values(Value a, Value b, Direction dir);

/// t dominates u under `order`: not worse anywhere, strictly better somewhere.
bool dominates(std::span<const Value> t, std::span<const Value> u,
               const OrderSpec& order, DominanceCounter& counter);

/// Same test on two rows of a dataset, using its oriented values.
bool dominates(const Dataset& data, TupleId t, TupleId u,
               DominanceCounter& counter);

/// Neither dominates the other and the tuples differ somewhere. Equal tuples
/// are not incomparable.
bool incomparable(std::span<const Value> t, std::span<const Value> u,
                  const OrderSpec& order, DominanceCounter& counter);
bool incomparable(const Dataset& data, TupleId t, TupleId u,
                  DominanceCounter& counter);

}  // namespace skyline
