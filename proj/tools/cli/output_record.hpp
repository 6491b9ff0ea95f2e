#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "skolemgen/open_state.hpp"
#include "skolemgen/sequence.hpp"
#include "skolemgen/sts.hpp"

namespace skolemgen::cli {

struct LevelCount {
  int n = 0;
  std::uint64_t count = 0;
  friend bool operator==(const LevelCount&, const LevelCount&) = default;
};

/// One unit of CLI output with its canonical text payload.
struct OutputRecord {
  enum class Kind { skolem, open_state, count, sts };

  Kind kind = Kind::skolem;
  std::string payload;
  int order = 0;
};

std::string_view to_string(OutputRecord::Kind kind);

OutputRecord make_record(const SkolemSequence& w);
OutputRecord make_record(const OpenState& state);
OutputRecord make_record(const LevelCount& count);
/// order is the Skolem order n of a system on 6n + 1 points.
OutputRecord make_record(const sts::TripleSystem& system);

using Payload = std::variant<SkolemSequence, OpenState, LevelCount, sts::TripleSystem>;

/// Re-reads a payload according to its kind. Throws std::invalid_argument.
Payload parse_payload(const OutputRecord& record);

/// `{"order":N,"values":[...]}` on one line, no trailing newline.
std::string to_ndjson(const SkolemSequence& w);
SkolemSequence skolem_from_ndjson(std::string_view line);

}  // namespace skolemgen::cli
