#include "skyline/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace skyline {

OrderSpec::OrderSpec(std::vector<Direction> directions)
    : directions_(std::move(directions)), rank_maps_(directions_.size()) {}

OrderSpec OrderSpec::uniform(Dim d, Direction dir) {
  return OrderSpec(std::vector<Direction>(d, dir));
}

void OrderSpec::set_rank_map(Dim dim, RankMap map) {
  if (dim >= directions_.size()) {
    throw StructuralError("rank map for dimension " + std::to_string(dim) +
                          " outside a " + std::to_string(dims()) +
                          "-dimensional order");
  }
  std::set<std::int64_t> ranks;
  for (const auto& [token, rank] : map) {
    if (!ranks.insert(rank).second) {
      throw StructuralError("rank map for dimension " + std::to_string(dim) +
                            " assigns rank " + std::to_string(rank) +
                            " to more than one category");
    }
  }
  rank_maps_[dim] = std::move(map);
}

const RankMap* OrderSpec::rank_map(Dim dim) const {
  if (dim >= rank_maps_.size() || !rank_maps_[dim]) return nullptr;
  return &*rank_maps_[dim];
}

bool OrderSpec::has_rank_maps() const {
  return std::any_of(rank_maps_.begin(), rank_maps_.end(),
                     [](const auto& m) { return m.has_value(); });
}

OrderSpec OrderSpec::resolved_for(Dim d) const {
  if (directions_.size() == d) return *this;
  if (directions_.empty()) return uniform(d);
  if (directions_.size() == 1 && !rank_maps_[0]) {
    return uniform(d, directions_[0]);
  }
  throw StructuralError("order specifies " + std::to_string(dims()) +
                        " dimensions but the data has " + std::to_string(d));
}

Dataset::Dataset(Dim d, std::vector<Value> row_major, OrderSpec order)
    : d_(d), raw_(std::move(row_major)) {
  if (d_ == 0) throw StructuralError("dataset dimensionality must be >= 1");
  if (raw_.size() % d_ != 0) {
    throw StructuralError("value count " + std::to_string(raw_.size()) +
                          " is not a multiple of d = " + std::to_string(d_));
  }
  order_ = order.resolved_for(d_);
  oriented_.resize(raw_.size());
  for (std::size_t k = 0; k < raw_.size(); ++k) {
    Value& v = raw_[k];
    if (!std::isfinite(v)) {
      throw StructuralError("non-finite value in tuple " +
                            std::to_string(k / d_) + ", dimension " +
                            std::to_string(k % d_));
    }
    if (v == 0.0) v = 0.0;  // fold -0.0 so blocks follow value equality
    oriented_[k] =
        order_.direction(k % d_) == Direction::minimize ? v : -v;
  }
}

SkylineResult::SkylineResult(std::vector<TupleId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SkylineResult::contains(TupleId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

Ordering compare_values(Value a, Value b, Direction dir) {
  if (a == b) return Ordering::equal;
  const bool a_smaller = a < b;
  return (a_smaller == (dir == Direction::minimize)) ? Ordering::better
                                                     : Ordering::worse;
}

bool dominates(std::span<const Value> t, std::span<const Value> u,
               const OrderSpec& order, DominanceCounter& counter) {
  if (t.size() != u.size() || order.dims() != t.size()) {
    throw StructuralError("dominance test on mismatched dimensionality (" +
                          std::to_string(t.size()) + " vs " +
                          std::to_string(u.size()) + ", order " +
                          std::to_string(order.dims()) + ")");
  }
  counter.tick();
  bool strictly_better = false;
  for (Dim i = 0; i < t.size(); ++i) {
    switch (compare_values(t[i], u[i], order.direction(i))) {
      case Ordering::worse:
        return false;
      case Ordering::better:
        strictly_better = true;
        break;
      case Ordering::equal:
        break;
    }
  }
  return strictly_better;
}

bool dominates(const Dataset& data, TupleId t, TupleId u,
               DominanceCounter& counter) {
  counter.tick();
  const Value* a = data.oriented_row(t).data();
  const Value* b = data.oriented_row(u).data();
  bool strictly_better = false;
  for (Dim i = 0, d = data.dims(); i < d; ++i) {
    if (a[i] > b[i]) return false;
    strictly_better |= a[i] < b[i];
  }
  return strictly_better;
}

bool incomparable(std::span<const Value> t, std::span<const Value> u,
                  const OrderSpec& order, DominanceCounter& counter) {
  if (dominates(t, u, order, counter)) return false;
  if (dominates(u, t, order, counter)) return false;
  return !std::equal(t.begin(), t.end(), u.begin(), u.end());
}

bool incomparable(const Dataset& data, TupleId t, TupleId u,
                  DominanceCounter& counter) {
  return incomparable(data.row(t), data.row(u), data.order(), counter);
}

}  // namespace skyline
