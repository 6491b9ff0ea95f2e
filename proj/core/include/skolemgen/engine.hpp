#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skolemgen/compact_state.hpp"
#include "skolemgen/open_state.hpp"
#include "skolemgen/sequence.hpp"

namespace skolemgen {

using LevelCounts = std::vector<std::uint64_t>;  // index i holds level i + 1

/// Called with the running visited-node total every progress interval.
using ProgressFn = std::function<void(std::uint64_t visited)>;
using SkolemSink = std::function<void(const SkolemSequence&)>;

inline constexpr std::uint64_t default_progress_interval = 10'000'000;

/// Thrown when a traversal hits its node or state budget (or runs out of
/// memory). partial() holds the exact counts of every level completed before
/// the limit was hit.
class ResourceExhausted : public std::runtime_error {
 public:
  ResourceExhausted(const std::string& what, LevelCounts partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const LevelCounts& partial() const noexcept { return partial_; }

 private:
  LevelCounts partial_;
};

struct EnumerationReport {
  int target_order = 0;
  LevelCounts per_level_counts;  // visited nodes at lengths 1..2N, pruned nodes included
  std::uint64_t skolem_count = 0;
  std::uint64_t pruned_nodes = 0;
  std::chrono::nanoseconds elapsed{0};

  std::uint64_t visits(int level) const { return per_level_counts.at(level - 1); }

  /// Element-wise sum; elapsed takes the maximum (workers run concurrently).
  void merge(const EnumerationReport& other);
};

/// Element-wise sum, the shorter list padded with zeros.
LevelCounts merge_level_counts(const LevelCounts& a, const LevelCounts& b);

enum class Traversal {
  depth_first,       // memory O(depth); levels completed by iterative deepening
  level_compressed,  // one level of (star set, used set) states with multiplicities
};

struct CountOptions {
  Traversal traversal = Traversal::depth_first;
  std::optional<std::uint64_t> node_budget;   // total nodes visited
  std::optional<std::size_t> state_budget;    // distinct states per level (level_compressed)
  std::function<void(int level, std::uint64_t count)> on_level;
  ProgressFn progress;
  std::uint64_t progress_interval = default_progress_interval;
};

/// Number of open Skolem sequences of each order 1..max_order, unpruned.
/// 1 <= max_order <= 63. Throws ResourceExhausted when a budget is hit.
LevelCounts count_open_levels(int max_order, const CountOptions& options = {});

/// Per-level node counts of the subtree below `root` down to length max_length.
/// Index i holds length i + 1; entries at or below root.length stay 0.
LevelCounts subtree_level_counts(const CompactState& root, int max_length);

/// Public wrapper of the compact pruning test. Throws std::out_of_range for
/// states longer than 63.
bool prune_feasible(const OpenState& state, int target_order);

struct EnumerateOptions {
  ProgressFn progress;
  std::uint64_t progress_interval = default_progress_interval;
};

/// Depth-first walk of the generating tree to length 2N. Every Skolem leaf is
/// handed to `sink` once, in canonical child order. Exceptions from the sink
/// abort the walk and propagate. 1 <= N <= 31.
EnumerationReport dfs_enumerate(int target_order, bool prune, const SkolemSink& sink,
                                const EnumerateOptions& options = {});

/// All Skolem sequences of order N in canonical order.
std::vector<SkolemSequence> enumerate_skolem(int target_order, bool prune = true);

/// First level whose node count reaches 4 * workers, capped at max_depth.
int split_depth(int max_depth, unsigned workers);

/// Same result as count_open_levels for any worker count.
LevelCounts parallel_count(int max_order, unsigned workers);

/// Parallel dfs_enumerate. The sink is serialized by a mutex; emission order
/// is unspecified when workers > 1. Counts in the report are deterministic.
EnumerationReport parallel_enumerate(int target_order, bool prune, unsigned workers,
                                     const SkolemSink& sink);

}  // namespace skolemgen
