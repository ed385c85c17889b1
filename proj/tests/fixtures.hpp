#pragma once

// Shared test data and brute-force helpers. Nothing here calls into the
// index or algorithm code, so these helpers can serve as oracles.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "skyline/core.hpp"
#include "skyline/datagen.hpp"

namespace fixtures {

using skyline::Dataset;
using skyline::Dim;
using skyline::TupleId;
using skyline::Value;

/// The 10-tuple, 6-dimension sample database (smaller is better).
inline Dataset sample() {
  return Dataset(6, {
                        7.5, 1.3, 7.5, 4.5, 5.3, 2.1,  // t0
                        4.7, 6.7, 6.7, 9.3, 3.8, 5.1,  // t1
                        8.4, 9.4, 5.3, 5.8, 6.7, 7.5,  // t2
                        5.3, 6.6, 6.7, 6.8, 5.8, 9.3,  // t3
                        8.4, 5.2, 5.1, 5.5, 4.1, 7.5,  // t4
                        9.1, 7.6, 2.6, 4.7, 7.3, 6.2,  // t5
                        5.3, 7.5, 1.9, 5.9, 3.4, 1.8,  // t6
                        5.3, 7.5, 6.7, 7.2, 6.3, 8.8,  // t7
                        6.7, 7.3, 7.6, 9.7, 5.3, 8.7,  // t8
                        7.5, 9.6, 4.8, 8.9, 9.5, 6.5,  // t9
                    });
}

inline const std::vector<TupleId> kSampleSkyline{0, 1, 3, 4, 5, 6};

/// Literal dominance check on raw values, all dimensions minimized.
inline bool brute_dominates_min(const Dataset& data, TupleId a, TupleId b) {
  bool strict = false;
  for (Dim i = 0; i < data.dims(); ++i) {
    if (data.value(a, i) > data.value(b, i)) return false;
    if (data.value(a, i) < data.value(b, i)) strict = true;
  }
  return strict;
}

/// Block offset as the number of distinct values strictly better than t's
/// (smaller-is-better data only).
inline std::size_t brute_block_offset(const Dataset& data, TupleId t, Dim i) {
  std::set<Value> better;
  for (TupleId u = 0; u < data.size(); ++u) {
    if (data.value(u, i) < data.value(t, i)) better.insert(data.value(u, i));
  }
  return better.size();
}

/// Number of (tuple, dimension) pairs where p's value is strictly better.
inline std::size_t brute_coverage(const Dataset& data, TupleId p) {
  std::size_t covered = 0;
  for (TupleId t = 0; t < data.size(); ++t) {
    for (Dim i = 0; i < data.dims(); ++i) {
      covered += data.value(p, i) < data.value(t, i);
    }
  }
  return covered;
}

/// Small random datasets for property tests. `levels` > 0 draws integer
/// values in [0, levels) so duplicates are common.
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t n, Dim d,
                              int levels = 0) {
  std::vector<Value> values(n * d);
  if (levels > 0) {
    std::uniform_int_distribution<int> pick(0, levels - 1);
    for (auto& v : values) v = pick(rng);
  } else {
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    for (auto& v : values) v = pick(rng);
  }
  return Dataset(d, std::move(values));
}

/// n tuples with all-distinct values per dimension where nobody dominates
/// anybody: dimension 0 ascends while dimension 1 descends; the remaining
/// dimensions are random permutations.
inline Dataset antichain(std::size_t n, Dim d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Value> values(n * d);
  std::vector<std::size_t> perm(n);
  for (std::size_t t = 0; t < n; ++t) {
    values[t * d] = static_cast<Value>(t);
    if (d > 1) values[t * d + 1] = static_cast<Value>(n - 1 - t);
  }
  for (Dim i = 2; i < d; ++i) {
    for (std::size_t t = 0; t < n; ++t) perm[t] = t;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t t = 0; t < n; ++t) {
      values[t * d + i] = static_cast<Value>(perm[t]);
    }
  }
  return Dataset(d, std::move(values));
}

}  // namespace fixtures
