#include "skolemgen/compact_state.hpp"

#include <stdexcept>

namespace skolemgen {

std::uint64_t CompactState::star_mask() const noexcept {
  std::uint64_t stars = 0;
  for (std::uint64_t rest = open_positions; rest != 0; rest &= rest - 1) {
    const int pos = std::countr_zero(rest);
    stars |= std::uint64_t{1} << (length + 1 - pos);
  }
  return stars;
}

CompactState compact(const OpenState& state) {
  if (state.order() > CompactState::max_length)
    throw std::out_of_range("state longer than " + std::to_string(CompactState::max_length));
  CompactState c;
  c.length = state.order();
  for (int pos = 1; pos <= c.length; ++pos)
    if (state.entries()[pos - 1].is_open()) c.open_positions |= std::uint64_t{1} << pos;
  for (int k : state.used()) c.used |= std::uint64_t{1} << k;
  return c;
}

bool is_skolem_label(const CompactState& state) noexcept {
  const int size = state.used_count();
  const int max_used = state.used == 0 ? 0 : 63 - std::countl_zero(state.used);
  return state.length > 0 && 2 * size == state.length && max_used == size;
}

bool prune_feasible(const CompactState& state, int target_order) noexcept {
  const int n = target_order;
  if (n < 1 || n > CompactState::max_length / 2) return false;
  const std::uint64_t lengths = (std::uint64_t{1} << (n + 1)) - 2;  // {1..n}

  // (d) every closed length must be a length of the target order
  if ((state.used & ~lengths) != 0) return false;

  // (a) star values only grow, and each becomes a final arc length
  const std::uint64_t stars = state.star_mask();
  if ((stars & ~lengths) != 0) return false;

  // (c) the remaining positions hold the p closers plus whole new arcs
  const int room = 2 * n - state.length - state.open_count();
  if (room < 0 || room % 2 != 0) return false;

  // (b) Hall condition: the open arcs need distinct unused final lengths,
  // each at least its current star value. All intervals end at n, so it
  // suffices to compare suffix counts.
  const std::uint64_t free = lengths & ~state.used;
  for (int t = n; t >= 1; --t) {
    if (std::popcount(stars >> t) > std::popcount(free >> t)) return false;
  }
  return true;
}

}  // namespace skolemgen
