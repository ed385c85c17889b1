#include "skyline/trace.hpp"

#include <json.hpp>

namespace skyline::sdi {

namespace {

nlohmann::ordered_json event(const char* name, Dim dim, std::size_t offset) {
  nlohmann::ordered_json j;
  j["event"] = name;
  j["dim"] = dim;
  j["block"] = offset;
  return j;
}

}  // namespace

void TraceWriter::block_traversed(Dim dim, std::size_t offset, Block block) {
  auto j = event("block-traversed", dim, offset);
  auto& tuples = j["tuples"] = nlohmann::ordered_json::array();
  for (const IndexEntry& e : block) tuples.push_back(e.tuple_id);
  out_ << j.dump() << '\n';
}

void TraceWriter::tuple_confirmed(TupleId t, Dim dim, std::size_t offset) {
  auto j = event("tuple-confirmed", dim, offset);
  j["tuple"] = t;
  out_ << j.dump() << '\n';
}

void TraceWriter::tuple_rejected(TupleId t, Dim dim, std::size_t offset) {
  auto j = event("tuple-rejected", dim, offset);
  j["tuple"] = t;
  out_ << j.dump() << '\n';
}

void TraceWriter::stop_line_updated(const StopLine& line, Dim dim,
                                    std::size_t offset) {
  auto j = event("stop-line-updated", dim, offset);
  j["tuple"] = line.owner;
  j["offsets"] = line.block_offsets;
  j["max"] = line.max_offset;
  j["mean"] = line.mean_offset();
  out_ << j.dump() << '\n';
}

void TraceWriter::stopped(Dim dim, std::size_t offset, bool by_stop_line) {
  auto j = event("stopped", dim, offset);
  j["reason"] = by_stop_line ? "stop-line" : "end-of-index";
  out_ << j.dump() << '\n';
}

}  // namespace skyline::sdi
