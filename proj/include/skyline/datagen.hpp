#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "skyline/core.hpp"

namespace skyline {

enum class Distribution : std::uint8_t { independent, correlated, anticorrelated };

/// Synthetic benchmark data. Values lie in [0,1], smaller is better.
///
/// - independent: every value i.i.d. uniform.
/// - correlated: per-tuple base u ~ U[0,1]; value_i = u + N(0, kCorrelatedSigma).
///   Tuples leaving [0,1] are redrawn whole.
/// - anticorrelated: per-tuple level l ~ N(0.5, kAntiLevelSigma); weights
///   w ~ Dirichlet(1,...,1); value_i = w_i * d * l, so the tuple sits on the
///   plane sum_i v_i = d * l, close to d/2.
/// Out-of-range anti-correlated values are clamped. If `duplicate_step` is
/// set every value is rounded to the nearest multiple of it.
struct GenSpec {
  Distribution distribution = Distribution::independent;
  std::size_t n = 1000;
  Dim d = 2;
  std::uint64_t seed = 1;
  std::optional<double> duplicate_step;
};

inline constexpr double kCorrelatedSigma = 0.05;
inline constexpr double kAntiLevelSigma = 0.05;

Dataset generate(const GenSpec& spec);

const char* to_string(Distribution distribution);
Distribution parse_distribution(std::string_view name);

}  // namespace skyline
