#include <doctest.h>

#include <cmath>
#include <sstream>

#include "skyline/bench.hpp"
#include "skyline/datagen.hpp"

using namespace skyline;

namespace {

std::string serialize(const Dataset& data) {
  std::ostringstream out;
  bench::write_dataset(out, data);
  return out.str();
}

}  // namespace

TEST_SUITE("datagen") {

TEST_CASE("same spec, same bytes") {
  for (auto dist : {Distribution::independent, Distribution::correlated,
                    Distribution::anticorrelated}) {
    const GenSpec spec{dist, 500, 5, 99, std::nullopt};
    CHECK(serialize(generate(spec)) == serialize(generate(spec)));
    GenSpec other = spec;
    other.seed = 100;
    CHECK(serialize(generate(spec)) != serialize(generate(other)));
  }
}

TEST_CASE("values stay in the unit interval") {
  for (auto dist : {Distribution::independent, Distribution::correlated,
                    Distribution::anticorrelated}) {
    const Dataset data = generate({dist, 2000, 7, 5, std::nullopt});
    CHECK(data.size() == 2000);
    CHECK(data.dims() == 7);
    for (Value v : data.raw_values()) {
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 1.0);
    }
  }
}

TEST_CASE("duplicate step rounds onto the grid") {
  const Dataset data =
      generate({Distribution::independent, 1000, 3, 2, 0.25});
  for (Value v : data.raw_values()) {
    const double k = v / 0.25;
    REQUIRE(k == std::round(k));
  }
}

TEST_CASE("anti-correlated tuples sit near the d/2 plane") {
  // clamping at 1 only ever lowers a sum
  const Dim d = 6;
  const Dataset data = generate({Distribution::anticorrelated, 1000, d, 8,
                                 std::nullopt});
  double mean = 0;
  for (TupleId t = 0; t < data.size(); ++t) {
    double sum = 0;
    for (Value v : data.row(t)) sum += v;
    mean += sum;
  }
  mean /= data.size();
  CHECK(mean <= d / 2.0);
  CHECK(mean > 0.4 * d);
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const double n = data.size();
  for (TupleId t = 0; t < data.size(); ++t) {
    const double x = data.value(t, 0), y = data.value(t, 1);
    sx += x, sy += y, sxx += x * x, syy += y * y, sxy += x * y;
  }
  CHECK(n * sxy - sx * sy < 0);
}

TEST_CASE("correlated dimensions move together") {
  const Dataset data = generate({Distribution::correlated, 2000, 2, 3,
                                 std::nullopt});
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const double n = data.size();
  for (TupleId t = 0; t < data.size(); ++t) {
    const double x = data.value(t, 0), y = data.value(t, 1);
    sx += x, sy += y, sxx += x * x, syy += y * y, sxy += x * y;
  }
  const double r = (n * sxy - sx * sy) /
                   std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  CHECK(r > 0.9);
}

TEST_CASE("correlated data has no pile-up in the best corner") {
  const Dataset data = generate({Distribution::correlated, 10000, 2, 1,
                                 std::nullopt});
  std::size_t at_zero = 0;
  for (Value v : data.raw_values()) at_zero += v == 0.0;
  CHECK(at_zero == 0);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(generate({Distribution::independent, 0, 2, 1, std::nullopt}),
                  StructuralError);
  CHECK_THROWS_AS(generate({Distribution::independent, 10, 0, 1, std::nullopt}),
                  StructuralError);
  CHECK_THROWS_AS(generate({Distribution::independent, 10, 2, 1, 0.0}),
                  StructuralError);
  CHECK_THROWS(parse_distribution("zipf"));
  CHECK(parse_distribution("anti") == Distribution::anticorrelated);
  CHECK(std::string(to_string(Distribution::correlated)) == "correlated");
}

}  // TEST_SUITE
