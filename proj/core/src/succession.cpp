#include "skolemgen/succession.hpp"

#include <stdexcept>

namespace skolemgen {

namespace {

// Star value of every open entry grows by one, skipping index `except`.
void increment_stars(std::vector<Entry>& entries, std::size_t except = static_cast<std::size_t>(-1)) {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (i != except && entries[i].is_open()) ++entries[i].value;
}

}  // namespace

OpenState add_opener(const OpenState& state) {
  std::vector<Entry> entries = state.entries_;
  increment_stars(entries);
  entries.push_back(Entry::open(1));
  return OpenState(OpenState::Trusted{}, std::move(entries), state.used_, state.open_count_ + 1);
}

std::vector<OpenState> add_closers(const OpenState& state) {
  std::vector<OpenState> result;
  const auto& src = state.entries_;
  // Star values increase right to left, so scanning from the back gives increasing j.
  for (std::size_t idx = src.size(); idx-- > 0;) {
    if (!src[idx].is_open()) continue;
    const int j = src[idx].value;
    if (state.used_.contains(j)) continue;
    std::vector<Entry> entries = src;
    increment_stars(entries, idx);
    entries[idx] = Entry::closed(j);
    entries.push_back(Entry::closed(j));
    std::set<int> used = state.used_;
    used.insert(j);
    result.push_back(OpenState(OpenState::Trusted{}, std::move(entries), std::move(used),
                               state.open_count_ - 1));
  }
  return result;
}

std::vector<OpenState> children(const OpenState& state) {
  std::vector<OpenState> result;
  result.reserve(1 + static_cast<std::size_t>(state.open_count()));
  result.push_back(add_opener(state));
  for (auto& child : add_closers(state)) result.push_back(std::move(child));
  return result;
}

OpenState parent(const OpenState& state) {
  if (state.entries_.empty()) throw std::invalid_argument("the empty state has no parent");
  std::vector<Entry> entries = state.entries_;
  const Entry last = entries.back();
  entries.pop_back();
  std::set<int> used = state.used_;
  int open_count = state.open_count_;
  std::size_t reopened = entries.size();
  if (last.is_open()) {
    --open_count;
  } else {
    // The partner of a closing k at position n sits at position n - k.
    reopened = entries.size() - static_cast<std::size_t>(last.value);
    entries[reopened] = Entry::open(last.value);
    used.erase(last.value);
    ++open_count;
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (i != reopened && entries[i].is_open()) --entries[i].value;
  return OpenState(OpenState::Trusted{}, std::move(entries), std::move(used), open_count);
}

bool is_skolem_label(const OpenState& state) {
  const auto& used = state.used();
  const auto size = static_cast<int>(used.size());
  const int max_used = used.empty() ? 0 : *used.rbegin();
  return state.order() > 0 && 2 * size == state.order() && max_used == size;
}

std::optional<std::vector<int>> plain_values(const OpenState& state) {
  if (state.open_count() != 0) return std::nullopt;
  std::vector<int> values;
  values.reserve(state.entries().size());
  for (const Entry& e : state.entries()) values.push_back(e.value);
  return values;
}

OpenState state_from_skolem(const SkolemSequence& w) {
  std::vector<Entry> entries;
  entries.reserve(w.size());
  for (int v : w.values()) entries.push_back(Entry::closed(v));
  return OpenState(std::move(entries));
}

}  // namespace skolemgen
