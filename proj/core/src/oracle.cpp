#include "skolemgen/oracle.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skolemgen::oracle {

namespace {

void place(int r, std::vector<int>& slots, std::set<SkolemSequence>& out) {
  if (r == 0) {
    out.insert(SkolemSequence(slots));
    return;
  }
  const int length = static_cast<int>(slots.size());
  for (int a = 0; a + r < length; ++a) {
    if (slots[a] != 0 || slots[a + r] != 0) continue;
    slots[a] = slots[a + r] = r;
    place(r - 1, slots, out);
    slots[a] = slots[a + r] = 0;
  }
}

}  // namespace

std::set<SkolemSequence> enumerate(int order) {
  if (order < 1 || order > max_order)
    throw std::invalid_argument("oracle order must be in 1.." + std::to_string(max_order));
  std::set<SkolemSequence> out;
  std::vector<int> slots(2 * order, 0);
  place(order, slots, out);
  return out;
}

bool validate(std::span<const int> values) {
  if (values.empty() || values.size() % 2 != 0) return false;
  const auto n = static_cast<long long>(values.size() / 2);

  std::map<long long, std::vector<long long>> blocks;  // value -> positions
  for (std::size_t i = 0; i < values.size(); ++i)
    blocks[values[i]].push_back(static_cast<long long>(i) + 1);

  if (static_cast<long long>(blocks.size()) != n) return false;
  long long r = 1;
  for (const auto& [value, positions] : blocks) {
    // map order: the r-th block must be the pair for difference r
    if (value != r) return false;
    if (positions.size() != 2 || positions[1] - positions[0] != r) return false;
    ++r;
  }
  return true;
}

}  // namespace skolemgen::oracle
