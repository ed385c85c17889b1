#include "skyline/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "skyline/index.hpp"
#include "skyline/trace.hpp"

namespace skyline::bench {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

Micros since(Clock::time_point start) {
  return std::chrono::duration_cast<Micros>(Clock::now() - start);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Field {
  std::string text;
  bool quoted = false;
};

/// Splits one CSV record. Quoted fields may contain commas and "" escapes.
std::vector<Field> split_record(std::string_view line, const std::string& source,
                                std::size_t line_no) {
  std::vector<Field> fields;
  std::size_t pos = 0;
  while (true) {
    Field field;
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos < line.size() && line[pos] == '"') {
      field.quoted = true;
      ++pos;
      while (true) {
        if (pos >= line.size()) {
          throw ParseError(source, line_no, "unterminated quoted field");
        }
        if (line[pos] == '"') {
          if (pos + 1 < line.size() && line[pos + 1] == '"') {
            field.text += '"';
            pos += 2;
            continue;
          }
          ++pos;
          break;
        }
        field.text += line[pos++];
      }
      while (pos < line.size() && line[pos] != ',') {
        if (line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
          throw ParseError(source, line_no, "text after closing quote");
        }
        ++pos;
      }
    } else {
      const auto comma = line.find(',', pos);
      const auto end = comma == std::string_view::npos ? line.size() : comma;
      field.text = std::string(trim(line.substr(pos, end - pos)));
      pos = end;
    }
    fields.push_back(std::move(field));
    if (pos >= line.size()) break;
    ++pos;  // skip the comma
  }
  return fields;
}

std::optional<double> parse_number(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

std::string format_value(Value v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_millis(Micros t) {
  const auto us = t.count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld.%03lld",
                static_cast<long long>(us / 1000),
                static_cast<long long>(us % 1000));
  return buf;
}

template <typename F>
Micros timed(F&& f) {
  const auto start = Clock::now();
  f();
  return since(start);
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : std::runtime_error(line ? source + ":" + std::to_string(line) + ": " + what
                              : source + ": " + what),
      line_(line) {}

Dataset parse_dataset(std::istream& in, const OrderSpec& order,
                      const std::string& source) {
  std::vector<Value> values;
  std::size_t d = 0;
  std::size_t line_no = 0;
  std::optional<OrderSpec> resolved;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<Field> fields = split_record(line, source, line_no);
    if (d == 0) {
      d = fields.size();
      try {
        resolved = order.resolved_for(d);
      } catch (const StructuralError& e) {
        throw ParseError(source, line_no, e.what());
      }
    } else if (fields.size() != d) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(d) + " columns, found " +
                           std::to_string(fields.size()));
    }
    for (Dim i = 0; i < d; ++i) {
      const Field& f = fields[i];
      if (const RankMap* ranks = resolved->rank_map(i)) {
        const auto it = ranks->find(f.text);
        if (it == ranks->end()) {
          throw ParseError(source, line_no,
                           "column " + std::to_string(i + 1) +
                               ": category '" + f.text + "' has no rank");
        }
        values.push_back(static_cast<Value>(it->second));
        continue;
      }
      const std::optional<double> v = parse_number(f.text);
      if (!v) {
        throw ParseError(source, line_no,
                         "column " + std::to_string(i + 1) + ": '" + f.text +
                             "' is not a number");
      }
      if (!std::isfinite(*v)) {
        throw ParseError(source, line_no,
                         "column " + std::to_string(i + 1) +
                             ": non-finite value '" + f.text + "'");
      }
      values.push_back(*v);
    }
  }
  if (d == 0) throw ParseError(source, 0, "no tuples");
  return Dataset(d, std::move(values), *resolved);
}

Dataset load_dataset(const fs::path& path, const OrderSpec& order) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_dataset(in, order, path.string());
}

void write_dataset(std::ostream& out, const Dataset& data) {
  std::string line;
  for (TupleId t = 0; t < data.size(); ++t) {
    line.clear();
    for (Dim i = 0; i < data.dims(); ++i) {
      if (i) line += ',';
      line += format_value(data.value(t, i));
    }
    line += '\n';
    out << line;
  }
}

void save_dataset(const fs::path& path, const Dataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dataset(out, data);
}

RankMap load_rank_map(const fs::path& path) {
  std::ifstream in(path);
  const std::string source = path.string();
  if (!in) throw ParseError(source, 0, "cannot open rank map");
  RankMap map;
  std::string line;
  std::size_t line_no = 0;
  std::int64_t next_rank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::string token(body);
    std::int64_t rank = next_rank;
    if (const auto comma = body.rfind(','); comma != std::string_view::npos) {
      token = std::string(trim(body.substr(0, comma)));
      const std::string_view digits = trim(body.substr(comma + 1));
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), rank);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(source, line_no, "bad rank '" + std::string(digits) + "'");
      }
    }
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
      token = token.substr(1, token.size() - 2);
    }
    if (!map.emplace(token, rank).second) {
      throw ParseError(source, line_no, "category '" + token + "' listed twice");
    }
    next_rank = rank + 1;
  }
  if (map.empty()) throw ParseError(source, 0, "rank map is empty");
  return map;
}

OrderSpec parse_order(std::string_view text) {
  std::vector<Direction> directions;
  std::vector<std::pair<Dim, fs::path>> rank_files;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view item = trim(text.substr(pos, end - pos));
    if (item == "min") {
      directions.push_back(Direction::minimize);
    } else if (item == "max") {
      directions.push_back(Direction::maximize);
    } else if (item.rfind("rankmap:", 0) == 0) {
      rank_files.emplace_back(directions.size(), fs::path(item.substr(8)));
      directions.push_back(Direction::minimize);
    } else {
      throw StructuralError("bad order item '" + std::string(item) +
                            "' (expected min, max or rankmap:<file>)");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  OrderSpec order(std::move(directions));
  for (auto& [dim, path] : rank_files) {
    order.set_rank_map(dim, load_rank_map(path));
  }
  return order;
}

std::vector<Algorithm> make_algorithms(const std::vector<std::string>& names,
                                       const AlgorithmOptions& options) {
  std::vector<std::string> expanded;
  for (const std::string& name : names) {
    if (name == "all") {
      for (const char* n : {"bnl", "sfs", "salsa", "sdi-rs"}) {
        expanded.emplace_back(n);
      }
    } else {
      expanded.push_back(name);
    }
  }
  if (expanded.empty()) throw StructuralError("no algorithm selected");

  std::vector<Algorithm> algorithms;
  for (const std::string& name : expanded) {
    if (name == "bnl") {
      algorithms.push_back({name, "", [](const Dataset& data, sdi::Observer*) {
                              Execution e;
                              e.search_time = timed(
                                  [&] { e.skyline = run_bnl(data, e.stats); });
                              return e;
                            }});
    } else if (name == "sfs") {
      algorithms.push_back({name, "", [](const Dataset& data, sdi::Observer*) {
                              Execution e;
                              std::vector<TupleId> order;
                              e.prepare_time =
                                  timed([&] { order = sfs_order(data); });
                              e.search_time = timed([&] {
                                e.skyline = run_sfs(data, order, e.stats);
                              });
                              return e;
                            }});
    } else if (name == "salsa") {
      const SalsaKey key = options.salsa_key;
      algorithms.push_back(
          {name, to_string(key), [key](const Dataset& data, sdi::Observer*) {
             Execution e;
             SalsaPlan plan;
             e.prepare_time = timed([&] { plan = salsa_plan(data, key); });
             e.search_time = timed(
                 [&] { e.skyline = run_salsa(data, plan, true, e.stats); });
             return e;
           }});
    } else if (name == "sdi-rs") {
      if (options.strategies.empty()) {
        throw StructuralError("sdi-rs selected without a strategy");
      }
      for (sdi::Switching s : options.strategies) {
        algorithms.push_back(
            {name, sdi::to_string(s),
             [s](const Dataset& data, sdi::Observer* observer) {
               Execution e;
               IndexSet indexes;
               e.prepare_time =
                   timed([&] { indexes = build_index_set(data); });
               sdi::Options opts;
               opts.switching = s;
               opts.observer = observer;
               e.search_time = timed([&] {
                 e.skyline = sdi::run_sdi_rs(data, indexes, opts, e.stats);
               });
               return e;
             }});
      }
    } else if (name == "oracle") {
      const std::size_t limit = options.oracle_limit;
      algorithms.push_back(
          {name, "", [limit](const Dataset& data, sdi::Observer*) {
             Execution e;
             DominanceCounter pairs;
             e.search_time = timed(
                 [&] { e.skyline = run_oracle(data, limit, &pairs); });
             e.stats.dominance_comparisons = pairs.count();
             return e;
           }});
    } else {
      throw StructuralError("unknown algorithm '" + name +
                            "' (expected bnl, sfs, salsa, sdi-rs, oracle, all)");
    }
  }
  return algorithms;
}

std::string to_csv_row(const RunReport& r) {
  std::string row;
  row += r.algorithm;
  row += ',' + r.strategy;
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.d);
  row += ',' + r.distribution;
  row += ',' + (r.seed ? std::to_string(*r.seed) : std::string());
  row += ',' + std::to_string(r.skyline_size);
  row += ',' + std::to_string(r.dominance_comparisons);
  row += ',' + format_millis(r.search_time);
  row += ',' + format_millis(r.total_time);
  row += ',' + (r.stop_line_updates ? std::to_string(*r.stop_line_updates)
                                    : std::string("NA"));
  row += r.early_stop ? ",true" : ",false";
  return row;
}

void write_reports(std::ostream& out, const std::vector<RunReport>& reports) {
  out << kReportHeader << '\n';
  for (const RunReport& r : reports) out << to_csv_row(r) << '\n';
}

Dataset load_input(const RunConfig& config) {
  if (const auto* path = std::get_if<fs::path>(&config.input)) {
    return load_dataset(*path, config.order);
  }
  const GenSpec& spec = std::get<GenSpec>(config.input);
  Dataset generated = generate(spec);
  if (config.order.dims() == 0) return generated;
  const auto raw = generated.raw_values();
  return Dataset(generated.dims(), std::vector<Value>(raw.begin(), raw.end()),
                 config.order);
}

namespace {

struct LoadedInput {
  Dataset data;
  Micros load_time{0};
  std::string distribution;
  std::optional<std::uint64_t> seed;
};

LoadedInput load_timed(const RunConfig& config) {
  LoadedInput in;
  in.load_time = timed([&] { in.data = load_input(config); });
  if (const auto* spec = std::get_if<GenSpec>(&config.input)) {
    in.distribution = to_string(spec->distribution);
    in.seed = spec->seed;
  } else {
    in.distribution = "file";
  }
  return in;
}

std::string label(const Algorithm& a) {
  return a.strategy.empty() ? a.name : a.name + "/" + a.strategy;
}

}  // namespace

SuiteResult run_suite(const RunConfig& config,
                      const std::vector<Algorithm>* algorithms) {
  const std::vector<Algorithm> selected =
      algorithms ? *algorithms
                 : make_algorithms(config.algorithms, config.algorithm_options);
  if (selected.empty()) throw StructuralError("no algorithm selected");

  const LoadedInput input = load_timed(config);

  std::optional<std::ofstream> trace_file;
  std::optional<sdi::TraceWriter> tracer;
  if (config.trace_path) {
    trace_file.emplace(*config.trace_path, std::ios::binary);
    if (!*trace_file) {
      throw std::runtime_error("cannot write " + config.trace_path->string());
    }
    tracer.emplace(*trace_file);
  }

  SuiteResult result;
  std::vector<std::string> labels;
  std::vector<SkylineResult> skylines;
  for (const Algorithm& algorithm : selected) {
    sdi::Observer* observer =
        (tracer && algorithm.name == "sdi-rs") ? &*tracer : nullptr;
    Execution e = algorithm.run(input.data, observer);

    RunReport r;
    r.algorithm = algorithm.name;
    r.strategy = algorithm.strategy;
    r.n = input.data.size();
    r.d = input.data.dims();
    r.distribution = input.distribution;
    r.seed = input.seed;
    r.skyline_size = e.skyline.size();
    r.dominance_comparisons = e.stats.dominance_comparisons;
    r.search_time = e.search_time;
    r.total_time = input.load_time + e.prepare_time + e.search_time;
    r.stop_line_updates = e.stats.stop_line_updates;
    r.early_stop = e.stats.early_stop;
    result.reports.push_back(std::move(r));
    labels.push_back(label(algorithm));
    skylines.push_back(std::move(e.skyline));
  }

  std::vector<std::string> mismatched;
  for (std::size_t k = 1; k < skylines.size(); ++k) {
    if (skylines[k] != skylines[0]) mismatched.push_back(labels[k]);
  }
  if (!mismatched.empty()) {
    std::string msg = "skyline mismatch: " + labels[0] + " (" +
                      std::to_string(skylines[0].size()) + " members) vs";
    for (const std::string& l : mismatched) msg += ' ' + l;
    throw CrossCheckFailure(msg);
  }
  result.skyline = skylines.front();

  if (config.report_path) {
    std::ofstream out(*config.report_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + config.report_path->string());
    }
    write_reports(out, result.reports);
  }
  if (config.members_path) {
    std::ofstream out(*config.members_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + config.members_path->string());
    }
    for (TupleId id : result.skyline.members()) out << id << '\n';
  }
  return result;
}

VerifyReport verify(const RunConfig& config,
                    const std::vector<Algorithm>* algorithms) {
  const std::vector<Algorithm> selected =
      algorithms ? *algorithms
                 : make_algorithms(config.algorithms, config.algorithm_options);
  if (selected.empty()) throw StructuralError("no algorithm selected");

  const Dataset data = load_input(config);
  const SkylineResult truth =
      run_oracle(data, config.algorithm_options.oracle_limit);

  VerifyReport report;
  report.oracle_size = truth.size();
  report.passed = true;
  for (const Algorithm& algorithm : selected) {
    const Execution e = algorithm.run(data, nullptr);
    VerifyOutcome outcome{algorithm.name, algorithm.strategy,
                          e.skyline == truth, e.skyline.size()};
    report.passed = report.passed && outcome.matches_oracle;
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

SkylineResult trace_sdi_rs(const Dataset& data, sdi::Switching switching,
                           std::ostream& out) {
  sdi::TraceWriter writer(out);
  const IndexSet indexes = build_index_set(data);
  sdi::Options options;
  options.switching = switching;
  options.observer = &writer;
  RunStats stats;
  return sdi::run_sdi_rs(data, indexes, options, stats);
}

}  // namespace skyline::bench
