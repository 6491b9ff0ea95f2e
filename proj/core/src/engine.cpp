#include "skolemgen/engine.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <new>
#include <string>
#include <thread>
#include <unordered_map>

namespace skolemgen {

namespace {

constexpr std::uint64_t bit(int k) noexcept { return std::uint64_t{1} << k; }

// Walk state: the compact form plus the entry layout (0 marks an open entry).
struct Cursor {
  CompactState state;
  std::array<std::uint8_t, CompactState::max_length + 1> seq{};  // 1-based
};

// Visits every child of `c` (opener first, then closers by increasing star
// value), recursing while on_node returns true and the length is below
// max_length. The cursor is restored before returning.
template <class OnNode>
void descend(Cursor& c, int max_length, OnNode& on_node) {
  const int len = c.state.length;
  const int next = len + 1;

  c.state.open_positions |= bit(next);
  c.seq[next] = 0;
  c.state.length = next;
  if (on_node(c) && next < max_length) descend(c, max_length, on_node);
  c.state.open_positions &= ~bit(next);
  c.state.length = len;

  // Higher position means smaller star value.
  for (std::uint64_t rest = c.state.open_positions; rest != 0;) {
    const int pos = 63 - std::countl_zero(rest);
    rest &= ~bit(pos);
    const int j = next - pos;
    if (c.state.used & bit(j)) continue;

    c.state.open_positions &= ~bit(pos);
    c.state.used |= bit(j);
    c.seq[pos] = static_cast<std::uint8_t>(j);
    c.seq[next] = static_cast<std::uint8_t>(j);
    c.state.length = next;
    if (on_node(c) && next < max_length) descend(c, max_length, on_node);
    c.state.open_positions |= bit(pos);
    c.state.used &= ~bit(j);
    c.seq[pos] = 0;
    c.state.length = len;
  }
}

struct BudgetHit {};

class ProgressTicker {
 public:
  ProgressTicker(const ProgressFn& fn, std::uint64_t interval)
      : fn_(fn), interval_(interval == 0 ? default_progress_interval : interval), next_(interval_) {}

  void tick() {
    if (++visited_ == next_) {
      next_ += interval_;
      if (fn_) fn_(visited_);
    }
  }
  std::uint64_t visited() const noexcept { return visited_; }

 private:
  const ProgressFn& fn_;
  std::uint64_t interval_;
  std::uint64_t next_;
  std::uint64_t visited_ = 0;
};

struct LevelCounter {
  LevelCounts& levels;
  bool operator()(const Cursor& c) {
    ++levels[c.state.length - 1];
    return true;
  }
};

// Node handler shared by sequential and parallel enumeration.
class EnumerationVisitor {
 public:
  EnumerationVisitor(EnumerationReport& report, bool prune, const SkolemSink& sink,
                     ProgressTicker* ticker = nullptr)
      : report_(report), prune_(prune), sink_(sink), ticker_(ticker),
        leaf_length_(2 * report.target_order) {}

  bool operator()(const Cursor& c) {
    const int len = c.state.length;
    ++report_.per_level_counts[len - 1];
    if (ticker_) ticker_->tick();
    if (prune_ && !prune_feasible(c.state, report_.target_order)) {
      ++report_.pruned_nodes;
      return false;
    }
    if (len < leaf_length_) return true;
    if (is_skolem_label(c.state)) {
      ++report_.skolem_count;
      sink_(SequenceBuilder::from_trusted(std::vector<int>(c.seq.begin() + 1, c.seq.begin() + 1 + len)));
    }
    return false;
  }

 private:
  EnumerationReport& report_;
  bool prune_;
  const SkolemSink& sink_;
  ProgressTicker* ticker_;
  int leaf_length_;
};

void check_max_order(int max_order) {
  if (max_order < 1 || max_order > CompactState::max_length)
    throw std::invalid_argument("max order must be in 1.." + std::to_string(CompactState::max_length));
}

void check_target_order(int target_order) {
  if (target_order < 1 || target_order > CompactState::max_length / 2)
    throw std::invalid_argument("target order must be in 1.." +
                                std::to_string(CompactState::max_length / 2));
}

LevelCounts count_depth_first(int max_order, const CountOptions& options) {
  LevelCounts done;
  ProgressTicker ticker(options.progress, options.progress_interval);
  std::uint64_t budget_left = options.node_budget.value_or(UINT64_MAX);
  try {
    for (int depth = 1; depth <= max_order; ++depth) {
      LevelCounts pass(depth, 0);
      auto on_node = [&](const Cursor& c) {
        if (budget_left == 0) throw BudgetHit{};
        --budget_left;
        ticker.tick();
        ++pass[c.state.length - 1];
        return true;
      };
      Cursor root;
      descend(root, depth, on_node);
      done.push_back(pass[depth - 1]);
      if (options.on_level) options.on_level(depth, pass[depth - 1]);
    }
  } catch (const BudgetHit&) {
    throw ResourceExhausted("node budget exhausted after " + std::to_string(done.size()) + " levels",
                            done);
  }
  return done;
}

struct StarKey {
  std::uint64_t stars;  // bit k: star value k present
  std::uint64_t used;
  friend bool operator==(const StarKey&, const StarKey&) = default;
};

struct StarKeyHash {
  std::size_t operator()(const StarKey& k) const noexcept {
    std::uint64_t h = k.stars * 0x9E3779B97F4A7C15ull;
    h ^= k.used + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Level-synchronous traversal over star-value sets. Children depend only on
// (stars, used), so merging equal keys with multiplicities is exact.
LevelCounts count_level_compressed(int max_order, const CountOptions& options) {
  using Level = std::unordered_map<StarKey, std::uint64_t, StarKeyHash>;
  LevelCounts done;
  try {
    Level current{{StarKey{0, 0}, 1}};
    for (int level = 1; level <= max_order; ++level) {
      Level next;
      next.reserve(current.size() * 3);
      for (const auto& [key, mult] : current) {
        next[StarKey{(key.stars << 1) | bit(1), key.used}] += mult;
        for (std::uint64_t rest = key.stars & ~key.used; rest != 0; rest &= rest - 1) {
          const int j = std::countr_zero(rest);
          next[StarKey{(key.stars & ~bit(j)) << 1, key.used | bit(j)}] += mult;
        }
      }
      if (options.state_budget && next.size() > *options.state_budget)
        throw ResourceExhausted("state budget exhausted at level " + std::to_string(level), done);
      std::uint64_t total = 0;
      for (const auto& entry : next) total += entry.second;
      done.push_back(total);
      if (options.on_level) options.on_level(level, total);
      current = std::move(next);
    }
  } catch (const std::bad_alloc&) {
    throw ResourceExhausted("out of memory after " + std::to_string(done.size()) + " levels", done);
  }
  return done;
}

}  // namespace

void EnumerationReport::merge(const EnumerationReport& other) {
  per_level_counts = merge_level_counts(per_level_counts, other.per_level_counts);
  skolem_count += other.skolem_count;
  pruned_nodes += other.pruned_nodes;
  elapsed = std::max(elapsed, other.elapsed);
}

LevelCounts merge_level_counts(const LevelCounts& a, const LevelCounts& b) {
  LevelCounts out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

LevelCounts count_open_levels(int max_order, const CountOptions& options) {
  check_max_order(max_order);
  switch (options.traversal) {
    case Traversal::depth_first: return count_depth_first(max_order, options);
    case Traversal::level_compressed: return count_level_compressed(max_order, options);
  }
  throw std::invalid_argument("unknown traversal");
}

LevelCounts subtree_level_counts(const CompactState& root, int max_length) {
  LevelCounts levels(std::max(max_length, 0), 0);
  if (root.length >= max_length) return levels;
  check_max_order(max_length);
  Cursor c;
  c.state = root;
  LevelCounter counter{levels};
  descend(c, max_length, counter);
  return levels;
}

bool prune_feasible(const OpenState& state, int target_order) {
  return prune_feasible(compact(state), target_order);
}

EnumerationReport dfs_enumerate(int target_order, bool prune, const SkolemSink& sink,
                                const EnumerateOptions& options) {
  check_target_order(target_order);
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.target_order = target_order;
  report.per_level_counts.assign(2 * target_order, 0);
  ProgressTicker ticker(options.progress, options.progress_interval);
  EnumerationVisitor visitor(report, prune, sink, &ticker);
  Cursor root;
  descend(root, 2 * target_order, visitor);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<SkolemSequence> enumerate_skolem(int target_order, bool prune) {
  std::vector<SkolemSequence> out;
  dfs_enumerate(target_order, prune, [&out](const SkolemSequence& w) { out.push_back(w); });
  return out;
}

int split_depth(int max_depth, unsigned workers) {
  check_max_order(max_depth);
  const std::uint64_t wanted = 4ull * std::max(workers, 1u);
  for (int depth = 1; depth < max_depth; ++depth) {
    std::uint64_t at_depth = 0;
    auto on_node = [&](const Cursor& c) {
      if (c.state.length == depth) ++at_depth;
      return true;
    };
    Cursor root;
    descend(root, depth, on_node);
    if (at_depth >= wanted) return depth;
  }
  return max_depth;
}

namespace {

// Runs `job(index)` for index in [0, count) on `workers` threads. The first
// exception stops the remaining work and is rethrown.
template <class Job>
void run_pool(std::size_t count, unsigned workers, Job job) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i; !failed.load() && (i = next.fetch_add(1)) < count;) job(id, i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  std::vector<std::jthread> threads;
  for (unsigned id = 1; id < workers; ++id) threads.emplace_back(worker, id);
  worker(0);
  threads.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace

LevelCounts parallel_count(int max_order, unsigned workers) {
  check_max_order(max_order);
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  const int split = split_depth(max_order, workers);

  LevelCounts total(max_order, 0);
  std::vector<CompactState> frontier;
  auto collect = [&](const Cursor& c) {
    ++total[c.state.length - 1];
    if (c.state.length == split) frontier.push_back(c.state);
    return true;
  };
  Cursor root;
  descend(root, split, collect);
  if (split == max_order) return total;

  std::vector<LevelCounts> partial(workers, LevelCounts(max_order, 0));
  run_pool(frontier.size(), workers, [&](unsigned id, std::size_t i) {
    partial[id] = merge_level_counts(partial[id], subtree_level_counts(frontier[i], max_order));
  });
  for (const auto& p : partial) total = merge_level_counts(total, p);
  return total;
}

EnumerationReport parallel_enumerate(int target_order, bool prune, unsigned workers,
                                     const SkolemSink& sink) {
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (workers == 1) return dfs_enumerate(target_order, prune, sink);
  check_target_order(target_order);
  const auto start = std::chrono::steady_clock::now();
  const int leaf_length = 2 * target_order;
  const int split = split_depth(leaf_length, workers);

  std::mutex sink_mutex;
  SkolemSink locked_sink = [&](const SkolemSequence& w) {
    std::lock_guard lock(sink_mutex);
    sink(w);
  };

  EnumerationReport report;
  report.target_order = target_order;
  report.per_level_counts.assign(leaf_length, 0);
  std::vector<Cursor> frontier;
  {
    EnumerationVisitor visitor(report, prune, locked_sink);
    auto collect = [&](const Cursor& c) {
      const bool expand = visitor(c);
      if (expand && c.state.length == split) frontier.push_back(c);
      return expand;
    };
    Cursor root;
    descend(root, split, collect);
  }

  std::vector<EnumerationReport> partial(workers);
  for (auto& p : partial) {
    p.target_order = target_order;
    p.per_level_counts.assign(leaf_length, 0);
  }
  run_pool(frontier.size(), workers, [&](unsigned id, std::size_t i) {
    EnumerationVisitor visitor(partial[id], prune, locked_sink);
    Cursor c = frontier[i];
    descend(c, leaf_length, visitor);
  });
  for (const auto& p : partial) report.merge(p);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace skolemgen
