#pragma once

#include <set>
#include <span>

#include "skolemgen/sequence.hpp"

namespace skolemgen::oracle {

inline constexpr int max_order = 6;

/// Every Skolem sequence of order N, found by placing the pairs (a, a + r)
/// for r = N down to 1 into free positions of {1..2N}. Does not touch the
/// generating tree. Throws std::invalid_argument unless 1 <= N <= max_order.
std::set<SkolemSequence> enumerate(int order);

/// True iff the positions of equal values partition {1..2n} into pairs
/// {a, a + r}, one pair for each r in 1..n.
bool validate(std::span<const int> values);

}  // namespace skolemgen::oracle
