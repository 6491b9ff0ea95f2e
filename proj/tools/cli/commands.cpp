#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arc_diagram.hpp"
#include "output_record.hpp"
#include "skolemgen/engine.hpp"
#include "skolemgen/sts.hpp"
#include "skolemgen/text.hpp"

namespace skolemgen::cli {

namespace {

void print_progress(std::ostream& err, std::uint64_t visited) {
  err << "progress: visited=" << visited << std::endl;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

// Output sink that is either the caller's stream or a file opened on demand.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::out | std::ios::trunc);
    stream_ = file_.is_open() ? static_cast<std::ostream*>(&file_) : nullptr;
  }
  bool ok() const { return stream_ != nullptr && stream_->good(); }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

}  // namespace

int cmd_count_open(const CountOpenArgs& args, Io io) {
  if (args.max_n < 1 || args.max_n > CompactState::max_length) {
    io.err << "error: --max-n must be in 1.." << CompactState::max_length << "\n";
    return exit_usage;
  }
  auto print = [&](int n, std::uint64_t count) {
    io.out << make_record(LevelCount{n, count}).payload << "\n";
    io.out.flush();
  };

  const bool budgeted = args.node_budget || args.state_budget;
  if (args.workers > 1 && !budgeted && !args.level_compressed) {
    const auto counts = parallel_count(args.max_n, args.workers);
    for (int n = 1; n <= args.max_n; ++n) print(n, counts[n - 1]);
    return exit_ok;
  }

  CountOptions options;
  options.traversal = args.level_compressed ? Traversal::level_compressed : Traversal::depth_first;
  options.node_budget = args.node_budget;
  options.state_budget = args.state_budget;
  options.on_level = print;
  options.progress = [&](std::uint64_t visited) { print_progress(io.err, visited); };
  try {
    count_open_levels(args.max_n, options);
  } catch (const ResourceExhausted& e) {
    io.err << "error: " << e.what() << "\n";
    return exit_resource;
  }
  return exit_ok;
}

int cmd_enumerate(const EnumerateArgs& args, Io io) {
  if (args.order < 1 || args.order > CompactState::max_length / 2) {
    io.err << "error: --order must be in 1.." << CompactState::max_length / 2 << "\n";
    return exit_usage;
  }
  OutputTarget target(args.out_path, io.out);
  if (!target.ok()) {
    io.err << "error: cannot write '" << args.out_path << "'\n";
    return exit_io;
  }
  auto& out = target.stream();
  SkolemSink sink = [&](const SkolemSequence& w) {
    out << (args.format == SequenceFormat::ndjson ? to_ndjson(w) : to_text(w)) << '\n';
  };

  EnumerationReport report;
  if (args.workers > 1) {
    report = parallel_enumerate(args.order, args.prune, args.workers, sink);
  } else {
    EnumerateOptions options;
    options.progress = [&](std::uint64_t visited) { print_progress(io.err, visited); };
    report = dfs_enumerate(args.order, args.prune, sink, options);
  }
  out.flush();
  if (!out.good()) {
    io.err << "error: write failed\n";
    return exit_io;
  }

  std::uint64_t visited = 0;
  for (auto c : report.per_level_counts) visited += c;
  io.err << "order=" << args.order << " count=" << report.skolem_count << " visited=" << visited
         << " pruned=" << report.pruned_nodes << " elapsed_ms="
         << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count() << "\n";
  return exit_ok;
}

int cmd_verify(const VerifyArgs& args, Io io) {
  std::ifstream file;
  std::istream* in = &io.in;
  if (!args.in_path.empty()) {
    file.open(args.in_path);
    if (!file.is_open()) {
      io.err << "error: cannot read '" << args.in_path << "'\n";
      return exit_io;
    }
    in = &file;
  }

  bool all_ok = true;
  std::string line;
  while (std::getline(*in, line)) {
    if (blank(line)) continue;
    std::vector<int> values;
    try {
      for (const Entry& e : parse_entries(line)) {
        if (e.is_open()) throw ParseError("open entry");
        values.push_back(e.value);
      }
    } catch (const ParseError& e) {
      io.out << (std::string_view(e.what()) == "open entry" ? "FAIL open\n" : "FAIL parse\n");
      all_ok = false;
      continue;
    }
    if (auto defect = find_skolem_defect(values)) {
      io.out << "FAIL " << to_string(*defect) << "\n";
      all_ok = false;
    } else {
      io.out << "OK order=" << values.size() / 2 << "\n";
    }
  }
  if (in->bad()) {
    io.err << "error: read failed\n";
    return exit_io;
  }
  return all_ok ? exit_ok : exit_failed;
}

int cmd_sts(const StsArgs& args, Io io) {
  std::optional<SkolemSequence> w;
  if (!args.sequence.empty()) {
    try {
      w = parse_skolem(args.sequence);
    } catch (const std::invalid_argument& e) {
      io.err << "error: " << e.what() << "\n";
      return exit_invalid_input;
    }
  } else if (args.order && args.index) {
    if (*args.order < 1 || *args.order > CompactState::max_length / 2) {
      io.err << "error: --order out of range\n";
      return exit_usage;
    }
    std::uint64_t seen = 0;
    struct Found {};
    try {
      dfs_enumerate(*args.order, true, [&](const SkolemSequence& s) {
        if (seen++ == *args.index) {
          w = s;
          throw Found{};
        }
      });
    } catch (const Found&) {
    }
    if (!w) {
      io.err << "error: order " << *args.order << " has only " << seen << " Skolem sequences\n";
      return exit_invalid_input;
    }
  } else {
    io.err << "error: give --sequence, or --order with --index\n";
    return exit_usage;
  }

  std::vector<sts::Triple> base;
  try {
    base = sts::base_blocks(*w, args.x);
  } catch (const std::out_of_range& e) {
    io.err << "error: --x must lie in 0.." << 6 * w->order() << "\n";
    return exit_usage;
  }
  io.out << "base n=" << w->order() << " x=" << args.x << "\n";
  for (const auto& b : base) io.out << b[0] << " " << b[1] << " " << b[2] << "\n";
  const auto system = sts::develop(base, w->order());
  io.out << sts::format_system(system);
  const bool ok = sts::verify(system);
  io.out << (ok ? "VERIFIED" : "FAILED") << "\n";
  return ok ? exit_ok : exit_failed;
}

int cmd_render(const RenderArgs& args, Io io) {
  std::optional<OpenState> state;
  try {
    state = state_from_text(args.sequence);
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }
  const ArcDiagram diagram = arc_diagram(*state);
  OutputTarget target(args.out_path, io.out);
  if (!target.ok()) {
    io.err << "error: cannot write '" << args.out_path << "'\n";
    return exit_io;
  }
  target.stream() << (args.format == DiagramFormat::svg ? render_svg(diagram) : render_ascii(diagram));
  target.stream().flush();
  return target.ok() ? exit_ok : exit_io;
}

int run_cli(int argc, const char* const* argv, Io io) {
  CLI::App app{"Generate, count and verify Skolem sequences via a generating tree of open arc diagrams"};
  app.require_subcommand(1);

  CountOpenArgs count_args;
  std::string traversal = "dfs";
  auto* count = app.add_subcommand("count-open", "Print the number of open Skolem sequences of each order");
  count->add_option("--max-n", count_args.max_n, "Largest order")->required();
  count->add_option("--workers", count_args.workers, "Worker threads")
      ->envname("SKOLEMGEN_WORKERS")
      ->check(CLI::PositiveNumber);
  count->add_option("--traversal", traversal, "dfs or bfs (level-compressed)")
      ->check(CLI::IsMember({"dfs", "bfs"}));
  count->add_option("--node-budget", count_args.node_budget, "Abort after this many visited nodes");
  count->add_option("--state-budget", count_args.state_budget,
                    "Abort when a bfs level holds more distinct states");

  EnumerateArgs enum_args;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "Emit every Skolem sequence of one order");
  enumerate->add_option("--order", enum_args.order, "Order N")->required();
  enumerate->add_flag("--prune,!--no-prune", enum_args.prune, "Feasibility pruning (default on)");
  enumerate->add_option("--format", enum_format, "text or ndjson")
      ->check(CLI::IsMember({"text", "ndjson"}));
  enumerate->add_option("--out", enum_args.out_path, "Output file (default stdout)");
  enumerate->add_option("--workers", enum_args.workers, "Worker threads")
      ->envname("SKOLEMGEN_WORKERS")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check one sequence per line");
  verify->add_option("--in", verify_args.in_path, "Input file (default stdin)");

  StsArgs sts_args;
  auto* sts_cmd = app.add_subcommand("sts", "Build and verify a Steiner triple system from a Skolem sequence");
  auto* seq_opt = sts_cmd->add_option("--sequence", sts_args.sequence, "Skolem sequence, comma separated");
  auto* order_opt = sts_cmd->add_option("--order", sts_args.order, "Order of the enumerated sequence");
  auto* index_opt = sts_cmd->add_option("--index", sts_args.index, "0-based index in canonical order");
  sts_cmd->add_option("--x", sts_args.x, "Base point x (default 0)");
  seq_opt->excludes(order_opt)->excludes(index_opt);
  order_opt->needs(index_opt);
  index_opt->needs(order_opt);

  RenderArgs render_args;
  std::string render_format = "ascii";
  auto* render = app.add_subcommand("render", "Draw the arc diagram of a (decorated) sequence");
  render->add_option("--sequence", render_args.sequence, "Sequence, stars allowed")->required();
  render->add_option("--format", render_format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", render_args.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (count->parsed()) {
    count_args.level_compressed = traversal == "bfs";
    return cmd_count_open(count_args, io);
  }
  if (enumerate->parsed()) {
    enum_args.format = enum_format == "ndjson" ? SequenceFormat::ndjson : SequenceFormat::text;
    return cmd_enumerate(enum_args, io);
  }
  if (verify->parsed()) return cmd_verify(verify_args, io);
  if (sts_cmd->parsed()) return cmd_sts(sts_args, io);
  render_args.format = render_format == "svg" ? DiagramFormat::svg : DiagramFormat::ascii;
  return cmd_render(render_args, io);
}

}  // namespace skolemgen::cli
