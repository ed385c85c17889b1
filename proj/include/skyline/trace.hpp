#pragma once

#include <ostream>

#include "skyline/sdi.hpp"

namespace skyline::sdi {

/// Writes one JSON object per line for every SDI-RS event:
///   {"event":"block-traversed","dim":3,"block":0,"tuples":[0]}
///   {"event":"tuple-confirmed","dim":3,"block":0,"tuple":0}
///   {"event":"tuple-rejected","dim":1,"block":4,"tuple":8}
///   {"event":"stop-line-updated","dim":3,"block":0,"tuple":0,
///    "offsets":[...],"max":6,"mean":2.1666666666666665}
///   {"event":"stopped","dim":0,"block":1,"reason":"stop-line"}
/// Dimensions and offsets are 0-based.
class TraceWriter : public Observer {
 public:
  explicit TraceWriter(std::ostream& out) : out_(out) {}

  void block_traversed(Dim dim, std::size_t offset, Block block) override;
  void tuple_confirmed(TupleId t, Dim dim, std::size_t offset) override;
  void tuple_rejected(TupleId t, Dim dim, std::size_t offset) override;
  void stop_line_updated(const StopLine& line, Dim dim,
                         std::size_t offset) override;
  void stopped(Dim dim, std::size_t offset, bool by_stop_line) override;

 private:
  std::ostream& out_;
};

}  // namespace skyline::sdi
