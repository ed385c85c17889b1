#include "skyline/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace skyline {

namespace {

void require_nonempty(const Dataset& data, const char* algorithm) {
  if (data.empty()) {
    throw StructuralError(std::string(algorithm) + " needs a nonempty dataset");
  }
}

bool oriented_less(const Dataset& data, TupleId a, TupleId b) {
  const auto ra = data.oriented_row(a);
  const auto rb = data.oriented_row(b);
  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(),
                                      rb.end());
}

/// Sorts ids by (primary, secondary) and then by oriented values and id.
/// The lexicographic fallback keeps the order sound when rounding in the
/// float keys collapses a dominating pair onto the same key.
std::vector<TupleId> sorted_ids(const Dataset& data,
                                const std::vector<Value>& primary,
                                const std::vector<Value>& secondary) {
  std::vector<TupleId> ids(data.size());
  std::iota(ids.begin(), ids.end(), TupleId{0});
  std::sort(ids.begin(), ids.end(), [&](TupleId a, TupleId b) {
    if (primary[a] != primary[b]) return primary[a] < primary[b];
    if (!secondary.empty() && secondary[a] != secondary[b]) {
      return secondary[a] < secondary[b];
    }
    if (oriented_less(data, a, b)) return true;
    if (oriented_less(data, b, a)) return false;
    return a < b;
  });
  return ids;
}

}  // namespace

bool Window::offer(const Dataset& data, TupleId t, DominanceCounter& counter) {
  for (auto it = members_.begin(); it != members_.end();) {
    if (dominates(data, *it, t, counter)) return false;
    if (dominates(data, t, *it, counter)) {
      it = members_.erase(it);
    } else {
      ++it;
    }
  }
  members_.push_back(t);
  return true;
}

bool Window::offer_presorted(const Dataset& data, TupleId t,
                             DominanceCounter& counter) {
  for (TupleId w : members_) {
    if (dominates(data, w, t, counter)) return false;
  }
  members_.push_back(t);
  return true;
}

bool Window::pairwise_non_dominating(const Dataset& data) const {
  DominanceCounter scratch;
  for (TupleId a : members_) {
    for (TupleId b : members_) {
      if (a != b && dominates(data, a, b, scratch)) return false;
    }
  }
  return true;
}

SkylineResult run_bnl(const Dataset& data, RunStats& stats) {
  require_nonempty(data, "BNL");
  stats = RunStats{};
  DominanceCounter counter;
  Window window;
  for (TupleId t = 0; t < data.size(); ++t) window.offer(data, t, counter);
  stats.dominance_comparisons = counter.count();
  return SkylineResult(window.members());
}

std::vector<Value> normalized_values(const Dataset& data) {
  const std::size_t n = data.size();
  const Dim d = data.dims();
  std::vector<Value> lo(d, std::numeric_limits<Value>::infinity());
  std::vector<Value> hi(d, -std::numeric_limits<Value>::infinity());
  for (TupleId t = 0; t < n; ++t) {
    for (Dim i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], data.oriented_value(t, i));
      hi[i] = std::max(hi[i], data.oriented_value(t, i));
    }
  }
  std::vector<Value> out(n * d);
  for (TupleId t = 0; t < n; ++t) {
    for (Dim i = 0; i < d; ++i) {
      const Value range = hi[i] - lo[i];
      out[t * d + i] =
          range > 0 ? (data.oriented_value(t, i) - lo[i]) / range : 0.0;
    }
  }
  return out;
}

std::vector<TupleId> sfs_order(const Dataset& data) {
  const std::vector<Value> norm = normalized_values(data);
  const Dim d = data.dims();
  std::vector<Value> entropy(data.size(), 0.0);
  for (TupleId t = 0; t < data.size(); ++t) {
    for (Dim i = 0; i < d; ++i) entropy[t] += std::log1p(norm[t * d + i]);
  }
  return sorted_ids(data, entropy, {});
}

SkylineResult run_sfs(const Dataset& data, const std::vector<TupleId>& order,
                      RunStats& stats) {
  require_nonempty(data, "SFS");
  stats = RunStats{};
  DominanceCounter counter;
  Window window;
  for (TupleId t : order) window.offer_presorted(data, t, counter);
  stats.dominance_comparisons = counter.count();
  return SkylineResult(window.members());
}

SkylineResult run_sfs(const Dataset& data, RunStats& stats) {
  require_nonempty(data, "SFS");
  return run_sfs(data, sfs_order(data), stats);
}

SalsaPlan salsa_plan(const Dataset& data, SalsaKey key) {
  require_nonempty(data, "SaLSa");
  const std::vector<Value> norm = normalized_values(data);
  const std::size_t n = data.size();
  const Dim d = data.dims();

  std::vector<Value> min_c(n), max_c(n), sum(n, 0.0);
  for (TupleId t = 0; t < n; ++t) {
    const auto first = norm.begin() + static_cast<std::ptrdiff_t>(t * d);
    const auto [mn, mx] = std::minmax_element(first, first + d);
    min_c[t] = *mn;
    max_c[t] = *mx;
    for (Dim i = 0; i < d; ++i) sum[t] += norm[t * d + i];
  }

  SalsaPlan plan;
  switch (key) {
    case SalsaKey::min_coordinate:
      plan.order = sorted_ids(data, min_c, sum);
      break;
    case SalsaKey::max_coordinate:
      plan.order = sorted_ids(data, max_c, sum);
      break;
    case SalsaKey::sum:
      plan.order = sorted_ids(data, sum, {});
      break;
  }
  plan.suffix_min_coordinate.assign(n + 1,
                                    std::numeric_limits<Value>::infinity());
  for (std::size_t k = n; k-- > 0;) {
    plan.suffix_min_coordinate[k] =
        std::min(plan.suffix_min_coordinate[k + 1], min_c[plan.order[k]]);
  }
  plan.max_coordinate = std::move(max_c);
  return plan;
}

SkylineResult run_salsa(const Dataset& data, const SalsaPlan& plan,
                        bool use_stop_point, RunStats& stats) {
  require_nonempty(data, "SaLSa");
  stats = RunStats{};
  DominanceCounter counter;
  Window window;
  Value stop_value = std::numeric_limits<Value>::infinity();
  const std::size_t n = plan.order.size();
  for (std::size_t k = 0; k < n; ++k) {
    // Every unread coordinate is strictly worse than every coordinate of
    // the stop point, so the stop point dominates all of them.
    if (use_stop_point && stop_value < plan.suffix_min_coordinate[k]) {
      stats.early_stop = true;
      break;
    }
    const TupleId t = plan.order[k];
    if (window.offer_presorted(data, t, counter)) {
      stop_value = std::min(stop_value, plan.max_coordinate[t]);
    }
  }
  stats.dominance_comparisons = counter.count();
  return SkylineResult(window.members());
}

SkylineResult run_salsa(const Dataset& data, const SalsaOptions& options,
                        RunStats& stats) {
  return run_salsa(data, salsa_plan(data, options.key), options.use_stop_point,
                   stats);
}

SkylineResult run_oracle(const Dataset& data, std::size_t max_n,
                         DominanceCounter* pairs_tested) {
  if (data.size() > max_n) {
    throw OracleRefused("oracle refuses n = " + std::to_string(data.size()) +
                        " (limit " + std::to_string(max_n) + ")");
  }
  const OrderSpec& order = data.order();
  const Dim d = data.dims();
  auto not_worse = [&](Value a, Value b, Dim i) {
    return order.direction(i) == Direction::minimize ? a <= b : a >= b;
  };
  std::vector<TupleId> members;
  for (TupleId t = 0; t < data.size(); ++t) {
    bool dominated = false;
    for (TupleId u = 0; u < data.size() && !dominated; ++u) {
      if (u == t) continue;
      if (pairs_tested) pairs_tested->tick();
      bool all_not_worse = true;
      bool some_better = false;
      for (Dim i = 0; i < d; ++i) {
        const Value a = data.value(u, i);
        const Value b = data.value(t, i);
        all_not_worse = all_not_worse && not_worse(a, b, i);
        some_better = some_better || (not_worse(a, b, i) && a != b);
      }
      dominated = all_not_worse && some_better;
    }
    if (!dominated) members.push_back(t);
  }
  return SkylineResult(std::move(members));
}

const char* to_string(SalsaKey key) {
  switch (key) {
    case SalsaKey::min_coordinate:
      return "min";
    case SalsaKey::max_coordinate:
      return "max";
    case SalsaKey::sum:
      return "sum";
  }
  return "?";
}

}  // namespace skyline
