#pragma once

#include <bit>
#include <cstdint>

#include "skolemgen/open_state.hpp"

namespace skolemgen {

/// Bitmask form of an OpenState without the closed-entry layout, enough to
/// drive the succession rule. Bit p of open_positions marks an open arc at
/// position p (1-based); its star value is length + 1 - p. Bit k of used
/// marks a closed length k.
struct CompactState {
  static constexpr int max_length = 63;

  std::uint64_t open_positions = 0;
  std::uint64_t used = 0;
  int length = 0;

  int open_count() const noexcept { return std::popcount(open_positions); }
  int used_count() const noexcept { return std::popcount(used); }

  /// Bit k set for every star value k.
  std::uint64_t star_mask() const noexcept;

  friend bool operator==(const CompactState&, const CompactState&) = default;
};

/// Throws std::out_of_range when the state is longer than max_length.
CompactState compact(const OpenState& state);

/// Label test on the compact form; agrees with is_skolem_label.
bool is_skolem_label(const CompactState& state) noexcept;

/// Sound infeasibility test: returns false only if no descendant of `state`
/// of length 2 * target_order is a Skolem sequence of that order.
bool prune_feasible(const CompactState& state, int target_order) noexcept;

}  // namespace skolemgen
