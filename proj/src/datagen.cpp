#include "skyline/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace skyline {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

Dataset generate(const GenSpec& spec) {
  if (spec.n == 0) throw StructuralError("generator needs n >= 1");
  if (spec.d == 0) throw StructuralError("generator needs d >= 1");
  if (spec.duplicate_step && !(*spec.duplicate_step > 0.0 &&
                               std::isfinite(*spec.duplicate_step))) {
    throw StructuralError("duplicate step must be a positive finite number");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> jitter(0.0, kCorrelatedSigma);
  std::normal_distribution<double> level(0.5, kAntiLevelSigma);
  std::exponential_distribution<double> gamma1(1.0);

  const std::size_t n = spec.n;
  const Dim d = spec.d;
  std::vector<Value> values(n * d);
  std::vector<double> weights(d);

  for (std::size_t t = 0; t < n; ++t) {
    Value* row = values.data() + t * d;
    switch (spec.distribution) {
      case Distribution::independent:
        for (Dim i = 0; i < d; ++i) row[i] = uniform(rng);
        break;
      case Distribution::correlated: {
        // redraw the whole tuple until it fits
        bool inside = false;
        while (!inside) {
          const double base = uniform(rng);
          inside = true;
          for (Dim i = 0; i < d; ++i) {
            row[i] = base + jitter(rng);
            inside = inside && row[i] >= 0.0 && row[i] <= 1.0;
          }
        }
        break;
      }
      case Distribution::anticorrelated: {
        const double plane = clamp01(level(rng));
        double total = 0.0;
        for (Dim i = 0; i < d; ++i) total += weights[i] = gamma1(rng);
        for (Dim i = 0; i < d; ++i) {
          row[i] = clamp01(weights[i] / total * static_cast<double>(d) * plane);
        }
        break;
      }
    }
    if (spec.duplicate_step) {
      const double q = *spec.duplicate_step;
      for (Dim i = 0; i < d; ++i) row[i] = clamp01(std::round(row[i] / q) * q);
    }
  }
  return Dataset(d, std::move(values));
}

const char* to_string(Distribution distribution) {
  switch (distribution) {
    case Distribution::independent:
      return "independent";
    case Distribution::correlated:
      return "correlated";
    case Distribution::anticorrelated:
      return "anticorrelated";
  }
  return "?";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "independent" || name == "indep" || name == "I") {
    return Distribution::independent;
  }
  if (name == "correlated" || name == "corr" || name == "C") {
    return Distribution::correlated;
  }
  if (name == "anticorrelated" || name == "anti-correlated" ||
      name == "anti" || name == "A") {
    return Distribution::anticorrelated;
  }
  throw StructuralError("unknown distribution '" + std::string(name) + "'");
}

}  // namespace skyline
