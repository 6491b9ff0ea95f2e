#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skolemgen {

/// One element of a decorated sequence: a closed arc endpoint `k` or an open
/// arc `*k`. For an open entry the value is the length the arc would have if
/// it were closed at the next position.
struct Entry {
  enum class Tag : unsigned char { Closed, Open };

  Tag tag = Tag::Closed;
  int value = 1;

  static constexpr Entry closed(int k) noexcept { return {Tag::Closed, k}; }
  static constexpr Entry open(int k) noexcept { return {Tag::Open, k}; }

  constexpr bool is_open() const noexcept { return tag == Tag::Open; }

  friend constexpr bool operator==(const Entry&, const Entry&) = default;
  friend constexpr auto operator<=>(const Entry&, const Entry&) = default;
};

enum class StateDefect {
  non_positive_value,
  star_position_mismatch,  // *k at position i with k != (n+1) - i
  duplicate_star,
  wrong_gap,               // copies of k not k apart
  too_many_copies,         // closed value seen more than twice
  unpaired_value,          // closed value seen exactly once
};

std::string_view to_string(StateDefect defect);

class InvalidState : public std::invalid_argument {
 public:
  InvalidState(StateDefect defect, std::size_t position, int value);

  StateDefect defect() const noexcept { return defect_; }
  /// 1-based position where the defect was detected; 0 for end-of-sequence checks.
  std::size_t position() const noexcept { return position_; }

 private:
  StateDefect defect_;
  std::size_t position_;
};

/// An open Skolem sequence together with its label set: the node of the
/// generating tree. Immutable once built; every instance satisfies
///   - each closed value occurs exactly twice, k positions apart, and is in used();
///   - open values are distinct and the open entry at position i has value (n+1) - i;
///   - order() == 2 * used().size() + open_count().
class OpenState {
 public:
  /// The empty root state, order 0.
  OpenState() = default;

  /// Validates `entries` and derives the label set. Throws InvalidState.
  explicit OpenState(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::set<int>& used() const noexcept { return used_; }
  int order() const noexcept { return static_cast<int>(entries_.size()); }
  int open_count() const noexcept { return open_count_; }

  /// Open values in increasing order.
  std::vector<int> star_values() const;

  friend bool operator==(const OpenState& a, const OpenState& b) {
    return a.entries_ == b.entries_;  // used() is a function of entries()
  }

 private:
  struct Trusted {};
  OpenState(Trusted, std::vector<Entry> entries, std::set<int> used, int open_count)
      : entries_(std::move(entries)), used_(std::move(used)), open_count_(open_count) {}

  friend OpenState add_opener(const OpenState&);
  friend std::vector<OpenState> add_closers(const OpenState&);
  friend OpenState parent(const OpenState&);

  std::vector<Entry> entries_;
  std::set<int> used_;
  int open_count_ = 0;
};

}  // namespace skolemgen
