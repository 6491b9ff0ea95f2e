#include "skolemgen/open_state.hpp"

#include <map>

namespace skolemgen {

std::string_view to_string(StateDefect defect) {
  switch (defect) {
    case StateDefect::non_positive_value: return "non-positive value";
    case StateDefect::star_position_mismatch: return "star value inconsistent with position";
    case StateDefect::duplicate_star: return "duplicate star value";
    case StateDefect::wrong_gap: return "wrong gap";
    case StateDefect::too_many_copies: return "value seen more than twice";
    case StateDefect::unpaired_value: return "value seen only once";
  }
  return "unknown defect";
}

namespace {

std::string describe(StateDefect defect, std::size_t position, int value) {
  std::string msg(to_string(defect));
  msg += " (value " + std::to_string(value);
  if (position != 0) msg += " at position " + std::to_string(position);
  msg += ")";
  return msg;
}

}  // namespace

InvalidState::InvalidState(StateDefect defect, std::size_t position, int value)
    : std::invalid_argument(describe(defect, position, value)),
      defect_(defect),
      position_(position) {}

OpenState::OpenState(std::vector<Entry> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  std::set<int> stars;
  std::map<int, std::size_t> first_seen;  // closed value -> position of first copy
  for (std::size_t pos = 1; pos <= n; ++pos) {
    const Entry e = entries_[pos - 1];
    if (e.value < 1) throw InvalidState(StateDefect::non_positive_value, pos, e.value);
    if (e.is_open()) {
      if (static_cast<std::size_t>(e.value) != n + 1 - pos)
        throw InvalidState(StateDefect::star_position_mismatch, pos, e.value);
      if (!stars.insert(e.value).second)
        throw InvalidState(StateDefect::duplicate_star, pos, e.value);
      ++open_count_;
      continue;
    }
    if (used_.contains(e.value)) throw InvalidState(StateDefect::too_many_copies, pos, e.value);
    auto [it, inserted] = first_seen.try_emplace(e.value, pos);
    if (inserted) continue;
    if (pos - it->second != static_cast<std::size_t>(e.value))
      throw InvalidState(StateDefect::wrong_gap, pos, e.value);
    used_.insert(e.value);
    first_seen.erase(it);
  }
  if (!first_seen.empty())
    throw InvalidState(StateDefect::unpaired_value, 0, first_seen.begin()->first);
}

std::vector<int> OpenState::star_values() const {
  std::vector<int> stars;
  stars.reserve(open_count_);
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->is_open()) stars.push_back(it->value);
  return stars;  // star values decrease left to right, so reverse scan is ascending
}

}  // namespace skolemgen
