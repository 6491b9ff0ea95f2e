#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace skolemgen::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failed = 1,  // verify found a bad line, or an STS failed verification
  exit_usage = 2,
  exit_resource = 3,
  exit_io = 4,
  exit_invalid_input = 5,
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct CountOpenArgs {
  int max_n = 0;
  unsigned workers = 1;
  bool level_compressed = false;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::size_t> state_budget;
};

enum class SequenceFormat { text, ndjson };

struct EnumerateArgs {
  int order = 0;
  bool prune = true;
  SequenceFormat format = SequenceFormat::text;
  std::string out_path;  // empty: stdout
  unsigned workers = 1;
};

struct VerifyArgs {
  std::string in_path;  // empty: stdin
};

struct StsArgs {
  std::string sequence;             // either this ...
  std::optional<int> order;         // ... or order + index
  std::optional<std::uint64_t> index;  // 0-based, canonical enumeration order
  std::int64_t x = 0;
};

enum class DiagramFormat { ascii, svg };

struct RenderArgs {
  std::string sequence;
  DiagramFormat format = DiagramFormat::ascii;
  std::string out_path;  // empty: stdout
};

int cmd_count_open(const CountOpenArgs& args, Io io);
int cmd_enumerate(const EnumerateArgs& args, Io io);
int cmd_verify(const VerifyArgs& args, Io io);
int cmd_sts(const StsArgs& args, Io io);
int cmd_render(const RenderArgs& args, Io io);

/// Parses argv and dispatches. Bad flags give exit_usage.
int run_cli(int argc, const char* const* argv, Io io);

}  // namespace skolemgen::cli
