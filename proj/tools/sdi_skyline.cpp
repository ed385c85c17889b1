// Command-line harness: generate datasets, run and cross-check skyline
// algorithms, verify them against the oracle, trace SDI-RS.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skyline/bench.hpp"
#include "skyline/datagen.hpp"

namespace {

using namespace skyline;

struct InputFlags {
  std::string input;
  std::string distribution = "independent";
  std::size_t n = 1000;
  std::size_t d = 4;
  std::uint64_t seed = 1;
  std::optional<double> duplicate_step;
  std::string order;

  void attach(CLI::App& cmd, bool with_file) {
    if (with_file) {
      cmd.add_option("-i,--input", input,
                     "CSV dataset (otherwise data is generated)");
    }
    cmd.add_option("--dist", distribution,
                   "independent | correlated | anticorrelated")
        ->capture_default_str();
    cmd.add_option("-n,--n", n, "cardinality")->capture_default_str();
    cmd.add_option("-d,--d", d, "dimensionality")->capture_default_str();
    cmd.add_option("--seed", seed)->capture_default_str();
    cmd.add_option("--dup", duplicate_step,
                   "round generated values to multiples of this step");
    cmd.add_option("--order", order,
                   "per-dimension orders: min|max|rankmap:<file>, "
                   "comma-separated (one min/max applies to all)");
  }

  GenSpec gen_spec() const {
    GenSpec spec;
    spec.distribution = parse_distribution(distribution);
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    spec.duplicate_step = duplicate_step;
    return spec;
  }

  void fill(bench::RunConfig& config) const {
    if (!input.empty()) {
      config.input = std::filesystem::path(input);
    } else {
      config.input = gen_spec();
    }
    if (!order.empty()) config.order = bench::parse_order(order);
  }
};

std::vector<sdi::Switching> parse_strategies(const std::string& s) {
  if (s == "bfs" || s == "BFS") return {sdi::Switching::bfs};
  if (s == "dfs" || s == "DFS") return {sdi::Switching::dfs};
  if (s == "both") return {sdi::Switching::bfs, sdi::Switching::dfs};
  throw StructuralError("unknown strategy '" + s + "' (bfs, dfs, both)");
}

SalsaKey parse_salsa_key(const std::string& s) {
  if (s == "min") return SalsaKey::min_coordinate;
  if (s == "max") return SalsaKey::max_coordinate;
  if (s == "sum") return SalsaKey::sum;
  throw StructuralError("unknown SaLSa key '" + s + "' (min, max, sum)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skyline queries on sorted dimensional indexes (SDI-RS) with "
               "BNL/SFS/SaLSa baselines"};
  app.require_subcommand(1);

  InputFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "write a synthetic dataset as CSV");
  gen_flags.attach(*gen, false);
  gen->add_option("-o,--out", gen_out, "output path (default: stdout)");

  InputFlags run_flags;
  std::vector<std::string> algos{"all"};
  std::string strategy = "both";
  std::string salsa_key = "min";
  std::string report_out, members_out, trace_out;
  auto* run = app.add_subcommand("run", "run algorithms and emit a CSV report");
  run_flags.attach(*run, true);
  run->add_option("--algo", algos, "bnl,sfs,salsa,sdi-rs,oracle or all")
      ->delimiter(',')
      ->capture_default_str();
  run->add_option("--strategy", strategy, "SDI-RS switching: bfs|dfs|both")
      ->capture_default_str();
  run->add_option("--salsa-key", salsa_key, "SaLSa sort key: min|max|sum")
      ->capture_default_str();
  run->add_option("-o,--out", report_out, "report CSV (default: stdout)");
  run->add_option("--members", members_out, "write skyline ids, one per line");
  run->add_option("--trace", trace_out, "write the SDI-RS event stream");

  InputFlags verify_flags;
  std::vector<std::string> verify_algos{"all"};
  std::string verify_strategy = "both";
  std::string verify_key = "min";
  std::size_t oracle_limit = kOracleDefaultLimit;
  auto* ver = app.add_subcommand("verify", "compare algorithms to the oracle");
  verify_flags.attach(*ver, true);
  ver->add_option("--algo", verify_algos)->delimiter(',')->capture_default_str();
  ver->add_option("--strategy", verify_strategy)->capture_default_str();
  ver->add_option("--salsa-key", verify_key)->capture_default_str();
  ver->add_option("--oracle-limit", oracle_limit)->capture_default_str();

  InputFlags trace_flags;
  std::string trace_strategy = "bfs";
  std::string trace_path;
  auto* tr = app.add_subcommand("trace", "write the SDI-RS event stream");
  trace_flags.attach(*tr, true);
  tr->add_option("--strategy", trace_strategy, "bfs|dfs")->capture_default_str();
  tr->add_option("-o,--out", trace_path, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const Dataset data = generate(gen_flags.gen_spec());
      if (gen_out.empty()) {
        bench::write_dataset(std::cout, data);
      } else {
        bench::save_dataset(gen_out, data);
      }
      return 0;
    }

    if (*run) {
      bench::RunConfig config;
      run_flags.fill(config);
      config.algorithms = algos;
      config.algorithm_options.strategies = parse_strategies(strategy);
      config.algorithm_options.salsa_key = parse_salsa_key(salsa_key);
      if (!report_out.empty()) config.report_path = report_out;
      if (!members_out.empty()) config.members_path = members_out;
      if (!trace_out.empty()) config.trace_path = trace_out;
      const bench::SuiteResult result = bench::run_suite(config);
      if (report_out.empty()) bench::write_reports(std::cout, result.reports);
      return 0;
    }

    if (*ver) {
      bench::RunConfig config;
      verify_flags.fill(config);
      config.algorithms = verify_algos;
      config.algorithm_options.strategies = parse_strategies(verify_strategy);
      config.algorithm_options.salsa_key = parse_salsa_key(verify_key);
      config.algorithm_options.oracle_limit = oracle_limit;
      const bench::VerifyReport report = bench::verify(config);
      std::cout << "oracle skyline size " << report.oracle_size << '\n';
      for (const auto& o : report.outcomes) {
        std::cout << (o.matches_oracle ? "[PASS] " : "[FAIL] ") << o.algorithm
                  << (o.strategy.empty() ? "" : "/" + o.strategy) << " size "
                  << o.skyline_size << '\n';
      }
      std::cout << (report.passed ? "verify: pass" : "verify: FAIL") << '\n';
      return report.passed ? 0 : 1;
    }

    if (*tr) {
      bench::RunConfig config;
      trace_flags.fill(config);
      const Dataset data = bench::load_input(config);
      const auto strategies = parse_strategies(trace_strategy);
      if (strategies.size() != 1) {
        throw StructuralError("trace needs exactly one strategy (bfs or dfs)");
      }
      if (trace_path.empty()) {
        bench::trace_sdi_rs(data, strategies.front(), std::cout);
      } else {
        std::ofstream out(trace_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + trace_path);
        bench::trace_sdi_rs(data, strategies.front(), out);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
