#pragma once

#include <string>
#include <vector>

#include "xyv/graph_io.hpp"

namespace xyv {

struct TranscriptRecord {
  std::string party;
  /// "send" or "recv", from the party's side.
  std::string direction;
  /// qubit | bits | correction
  std::string kind;
  Json payload;
};

/// Ordered classical view of a protocol run.
class Transcript {
 public:
  void add(std::string party, std::string direction, std::string kind, Json payload) {
    records_.push_back({std::move(party), std::move(direction), std::move(kind), std::move(payload)});
  }
  const std::vector<TranscriptRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  OrderedJson to_json() const {
    OrderedJson arr = OrderedJson::array();
    for (const auto& r : records_) {
      OrderedJson o;
      o["party"] = r.party;
      o["direction"] = r.direction;
      o["kind"] = r.kind;
      o["payload"] = r.payload;
      arr.push_back(std::move(o));
    }
    return arr;
  }

 private:
  std::vector<TranscriptRecord> records_;
};

}  // namespace xyv
