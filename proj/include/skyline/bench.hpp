#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skyline/baselines.hpp"
#include "skyline/core.hpp"
#include "skyline/datagen.hpp"
#include "skyline/sdi.hpp"

namespace skyline::bench {

using Micros = std::chrono::microseconds;

/// Dataset or rank-map file could not be parsed. line() is 1-based, 0 when
/// the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Header-less CSV, one tuple per row. Tuple ids follow row order. Columns
/// carrying a rank map accept category tokens (quoted or bare); every other
/// column must hold a finite number. Blank lines are ignored.
Dataset parse_dataset(std::istream& in, const OrderSpec& order = {},
                      const std::string& source = "<stream>");
Dataset load_dataset(const std::filesystem::path& path,
                     const OrderSpec& order = {});
void write_dataset(std::ostream& out, const Dataset& data);
void save_dataset(const std::filesystem::path& path, const Dataset& data);

/// One category per line, best first, or "token,rank" lines. '#' starts a
/// comment line.
RankMap load_rank_map(const std::filesystem::path& path);

/// Comma-separated per-dimension orders: "min", "max" or "rankmap:<file>".
/// A single min/max is broadcast to every dimension.
OrderSpec parse_order(std::string_view text);

/// Result of one algorithm on one dataset. Times exclude data loading.
struct Execution {
  SkylineResult skyline;
  RunStats stats;
  Micros prepare_time{0};  // index build or presort
  Micros search_time{0};
};

struct Algorithm {
  std::string name;      // bnl, sfs, salsa, sdi-rs, oracle
  std::string strategy;  // BFS/DFS for sdi-rs, key for salsa, else empty
  std::function<Execution(const Dataset&, sdi::Observer*)> run;
};

struct AlgorithmOptions {
  std::vector<sdi::Switching> strategies{sdi::Switching::bfs,
                                         sdi::Switching::dfs};
  SalsaKey salsa_key = SalsaKey::min_coordinate;
  std::size_t oracle_limit = kOracleDefaultLimit;
};

/// Builds the runners for `names` ("all" = bnl, sfs, salsa, sdi-rs). Throws
/// StructuralError on an unknown name or an empty selection.
std::vector<Algorithm> make_algorithms(const std::vector<std::string>& names,
                                       const AlgorithmOptions& options = {});

struct RunReport {
  std::string algorithm;
  std::string strategy;
  std::size_t n = 0;
  Dim d = 0;
  std::string distribution;  // "file" for loaded data
  std::optional<std::uint64_t> seed;
  std::size_t skyline_size = 0;
  std::uint64_t dominance_comparisons = 0;
  Micros search_time{0};
  Micros total_time{0};
  std::optional<std::uint64_t> stop_line_updates;
  bool early_stop = false;
};

inline constexpr std::string_view kReportHeader =
    "algorithm,strategy,n,d,distribution,seed,skyline_size,"
    "dominance_comparisons,search_time_ms,total_time_ms,stop_line_updates,"
    "early_stop";

std::string to_csv_row(const RunReport& report);
void write_reports(std::ostream& out, const std::vector<RunReport>& reports);

struct RunConfig {
  std::variant<std::filesystem::path, GenSpec> input;
  std::vector<std::string> algorithms{"all"};
  OrderSpec order;
  AlgorithmOptions algorithm_options;
  std::optional<std::filesystem::path> report_path;
  std::optional<std::filesystem::path> members_path;
  /// SDI-RS runs write their event stream here when set.
  std::optional<std::filesystem::path> trace_path;
};

/// The selected algorithms disagree on the skyline.
class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteResult {
  std::vector<RunReport> reports;
  SkylineResult skyline;
};

/// Loads/generates the data once, runs every algorithm on it, cross-checks
/// the member sets and writes the configured outputs. `algorithms` replaces
/// the selection in `config` when given.
SuiteResult run_suite(const RunConfig& config,
                      const std::vector<Algorithm>* algorithms = nullptr);

struct VerifyOutcome {
  std::string algorithm;
  std::string strategy;
  bool matches_oracle = false;
  std::size_t skyline_size = 0;
};

struct VerifyReport {
  bool passed = false;
  std::size_t oracle_size = 0;
  std::vector<VerifyOutcome> outcomes;
};

/// Runs the oracle and every selected algorithm; passes iff all member sets
/// equal the oracle's.
VerifyReport verify(const RunConfig& config,
                    const std::vector<Algorithm>* algorithms = nullptr);

/// Writes the trace of one SDI-RS run and returns its result.
SkylineResult trace_sdi_rs(const Dataset& data, sdi::Switching switching,
                           std::ostream& out);

Dataset load_input(const RunConfig& config);

}  // namespace skyline::bench
