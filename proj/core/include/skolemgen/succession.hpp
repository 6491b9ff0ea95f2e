#pragma once

#include <optional>
#include <vector>

#include "skolemgen/open_state.hpp"
#include "skolemgen/sequence.hpp"

namespace skolemgen {

/// Appends an open arc: every star value grows by one and `*1` is appended.
OpenState add_opener(const OpenState& state);

/// One child per open value j not yet in used(), in increasing order of j.
/// The chosen `*j` becomes a closed `j`, a closing `j` is appended, j joins
/// used(), and every other star value grows by one.
std::vector<OpenState> add_closers(const OpenState& state);

/// add_opener(state) followed by add_closers(state).
std::vector<OpenState> children(const OpenState& state);

/// Inverse of the succession rule: drop the last entry (re-opening its
/// partner when it was a closer) and shrink every star value by one.
/// Throws std::invalid_argument on the empty state.
OpenState parent(const OpenState& state);

/// Label test: 2|used| == order, max(used) == |used| and order > 0.
/// max of an empty set is taken as 0.
bool is_skolem_label(const OpenState& state);

/// The values of a state with no open entries. nullopt otherwise.
std::optional<std::vector<int>> plain_values(const OpenState& state);

OpenState state_from_skolem(const SkolemSequence& w);

}  // namespace skolemgen
