#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "skyline/baselines.hpp"
#include "skyline/datagen.hpp"
#include "skyline/sdi.hpp"
#include "skyline/trace.hpp"

using namespace skyline;
using namespace skyline::sdi;

namespace {

GenSpec random_spec(std::mt19937_64& rng, std::size_t max_n, Dim max_d) {
  GenSpec spec;
  spec.distribution = static_cast<Distribution>(rng() % 3);
  spec.n = 1 + rng() % max_n;
  spec.d = 1 + rng() % max_d;
  spec.seed = rng();
  switch (rng() % 3) {
    case 0: spec.duplicate_step = 0.1; break;
    case 1: spec.duplicate_step = 0.25; break;
    default: break;
  }
  return spec;
}

/// At every range check, all true skyline tuples dominating t must already
/// sit in S_dim, and a dominated t must have one. S_dim never reaches past
/// t's block.
class ShadowCheck : public Observer {
 public:
  ShadowCheck(const Dataset& data, const IndexSet& indexes,
              const SkylineResult& truth)
      : data_(data), indexes_(indexes), truth_(truth) {}

  void before_confirm(TupleId t, Dim dim, const SkylineState& state) override {
    ++checks;
    const std::size_t block = indexes_[dim].block_offset_of(t);
    for (TupleId u : state.range(dim)) {
      if (indexes_[dim].block_offset_of(u) > block) ++violations;
    }
    bool dominated = false;
    for (TupleId u : truth_.members()) {
      if (!fixtures::brute_dominates_min(data_, u, t)) continue;
      dominated = true;
      if (!state.in_range(dim, u)) ++violations;
    }
    if (dominated != !truth_.contains(t)) ++violations;
    // S only grows and never holds a false positive
    if (state.skyline().size() < last_size_) ++violations;
    last_size_ = state.skyline().size();
    for (TupleId s : state.skyline()) {
      if (!truth_.contains(s)) ++violations;
    }
  }

  std::size_t checks = 0;
  std::size_t violations = 0;

 private:
  const Dataset& data_;
  const IndexSet& indexes_;
  const SkylineResult& truth_;
  std::size_t last_size_ = 0;
};

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("every algorithm matches the oracle on random data") {
  std::mt19937_64 rng(20240601);
  for (int round = 0; round < 150; ++round) {
    const GenSpec spec = random_spec(rng, 400, 8);
    CAPTURE(spec.n);
    CAPTURE(spec.d);
    CAPTURE(spec.seed);
    const Dataset data = generate(spec);
    const SkylineResult truth = run_oracle(data);
    RunStats stats;
    REQUIRE(run_bnl(data, stats) == truth);
    REQUIRE(run_sfs(data, stats) == truth);
    for (SalsaKey key : {SalsaKey::min_coordinate, SalsaKey::max_coordinate,
                         SalsaKey::sum}) {
      REQUIRE(run_salsa(data, {key, true}, stats) == truth);
    }
    const IndexSet indexes = build_index_set(data);
    for (Switching s : {Switching::bfs, Switching::dfs}) {
      for (bool stop_line : {true, false}) {
        Options options;
        options.switching = s;
        options.use_stop_line = stop_line;
        REQUIRE(run_sdi_rs(data, indexes, options, stats) == truth);
      }
    }
  }
}

TEST_CASE("any scan order gives the same skyline") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 40; ++round) {
    const GenSpec spec = random_spec(rng, 300, 6);
    const Dataset data = generate(spec);
    const SkylineResult truth = run_oracle(data);
    const IndexSet indexes = build_index_set(data);
    std::vector<Dim> order(data.dims());
    for (Dim i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (Switching s : {Switching::bfs, Switching::dfs}) {
      Options options;
      options.switching = s;
      options.scan_order = order;
      RunStats stats;
      REQUIRE(run_sdi_rs(data, indexes, options, stats) == truth);
    }
  }
}

TEST_CASE("range checks only ever see complete dominator sets") {
  std::mt19937_64 rng(99);
  std::size_t checks = 0;
  for (int round = 0; round < 60; ++round) {
    const GenSpec spec = random_spec(rng, 250, 6);
    const Dataset data = generate(spec);
    const SkylineResult truth = run_oracle(data);
    const IndexSet indexes = build_index_set(data);
    for (Switching s : {Switching::bfs, Switching::dfs}) {
      ShadowCheck shadow(data, indexes, truth);
      Options options;
      options.switching = s;
      options.observer = &shadow;
      RunStats stats;
      REQUIRE(run_sdi_rs(data, indexes, options, stats) == truth);
      REQUIRE(shadow.violations == 0);
      checks += shadow.checks;
    }
  }
  CHECK(checks > 1000);
}

TEST_CASE("the stop line only ever saves work") {
  std::mt19937_64 rng(5);
  std::size_t early = 0;
  for (int round = 0; round < 60; ++round) {
    const GenSpec spec = random_spec(rng, 600, 6);
    const Dataset data = generate(spec);
    const IndexSet indexes = build_index_set(data);
    for (Switching s : {Switching::bfs, Switching::dfs}) {
      Options with, without;
      with.switching = without.switching = s;
      without.use_stop_line = false;
      RunStats a, b;
      REQUIRE(run_sdi_rs(data, indexes, with, a) ==
              run_sdi_rs(data, indexes, without, b));
      REQUIRE(a.dominance_comparisons <= b.dominance_comparisons);
      REQUIRE_FALSE(b.early_stop);
      early += a.early_stop;
    }
  }
  CHECK(early > 0);
}

TEST_CASE("antichains stay within the pairwise bound") {
  for (std::size_t n : {2u, 10u, 57u, 200u, 500u}) {
    for (Dim d : {2u, 3u, 6u}) {
      const Dataset data = fixtures::antichain(n, d, n * 31 + d);
      const std::uint64_t bound = n * (n - 1) / 2;
      for (Switching s : {Switching::bfs, Switching::dfs}) {
        RunStats stats;
        CHECK(run_sdi_rs(data, s, stats).size() == n);
        CHECK(stats.dominance_comparisons <= bound);
      }
    }
  }
}

TEST_CASE("runs replay identically") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 10; ++round) {
    const Dataset data = generate(random_spec(rng, 500, 6));
    for (Switching s : {Switching::bfs, Switching::dfs}) {
      std::ostringstream first, second;
      TraceWriter w1(first), w2(second);
      const IndexSet indexes = build_index_set(data);
      Options options;
      options.switching = s;
      RunStats a, b;
      options.observer = &w1;
      run_sdi_rs(data, indexes, options, a);
      options.observer = &w2;
      run_sdi_rs(data, indexes, options, b);
      REQUIRE(first.str() == second.str());
      REQUIRE(a.dominance_comparisons == b.dominance_comparisons);
      REQUIRE(a.stop_line_updates == b.stop_line_updates);
    }
  }
}

TEST_CASE("mixed directions agree with the negated minimization problem") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 20; ++round) {
    const Dim d = 2 + rng() % 4;
    const Dataset base = fixtures::random_dataset(rng, 200, d, 1 + rng() % 8);
    std::vector<Direction> dirs(d);
    std::vector<Value> flipped(base.raw_values().begin(),
                               base.raw_values().end());
    for (Dim i = 0; i < d; ++i) {
      dirs[i] = rng() % 2 ? Direction::maximize : Direction::minimize;
      if (dirs[i] == Direction::maximize) {
        for (std::size_t t = 0; t < base.size(); ++t) {
          flipped[t * d + i] = -flipped[t * d + i];
        }
      }
    }
    const Dataset mixed(d, flipped, OrderSpec(dirs));
    const SkylineResult truth = run_oracle(base);
    RunStats stats;
    REQUIRE(run_oracle(mixed) == truth);
    REQUIRE(run_bnl(mixed, stats) == truth);
    REQUIRE(run_sfs(mixed, stats) == truth);
    REQUIRE(run_salsa(mixed, SalsaOptions{}, stats) == truth);
    REQUIRE(run_sdi_rs(mixed, Switching::bfs, stats) == truth);
    REQUIRE(run_sdi_rs(mixed, Switching::dfs, stats) == truth);
  }
}

}  // TEST_SUITE
