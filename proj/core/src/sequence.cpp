#include "skolemgen/sequence.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace skolemgen {

std::string_view to_string(SkolemDefect defect) {
  switch (defect) {
    case SkolemDefect::empty: return "empty";
    case SkolemDefect::odd_length: return "odd-length";
    case SkolemDefect::value_range: return "value-range";
    case SkolemDefect::count: return "count";
    case SkolemDefect::gap: return "gap";
  }
  return "unknown";
}

std::optional<SkolemDefect> find_skolem_defect(std::span<const int> values) {
  if (values.empty()) return SkolemDefect::empty;
  if (values.size() % 2 != 0) return SkolemDefect::odd_length;
  const auto n = static_cast<long long>(values.size() / 2);
  if (std::any_of(values.begin(), values.end(),
                  [n](int v) { return v < 1 || v > n; }))
    return SkolemDefect::value_range;

  // first[k] / second[k]: 1-based positions of the copies of k, 0 if absent.
  std::vector<std::size_t> first(n + 1, 0), second(n + 1, 0);
  for (std::size_t pos = 1; pos <= values.size(); ++pos) {
    const int k = values[pos - 1];
    if (first[k] == 0) {
      first[k] = pos;
    } else if (second[k] == 0) {
      second[k] = pos;
    } else {
      return SkolemDefect::count;
    }
  }
  for (long long k = 1; k <= n; ++k)
    if (second[k] == 0) return SkolemDefect::count;
  for (long long k = 1; k <= n; ++k)
    if (second[k] - first[k] != static_cast<std::size_t>(k)) return SkolemDefect::gap;
  return std::nullopt;
}

bool validate_skolem(std::span<const int> values) {
  return !find_skolem_defect(values).has_value();
}

SkolemSequence::SkolemSequence(std::vector<int> values) : values_(std::move(values)) {
  if (auto defect = find_skolem_defect(values_))
    throw std::invalid_argument("not a Skolem sequence: " + std::string(to_string(*defect)));
}

SkolemSequence reverse(const SkolemSequence& w) {
  std::vector<int> reversed(w.values_.rbegin(), w.values_.rend());
  return SkolemSequence(SkolemSequence::Trusted{}, std::move(reversed));
}

SkolemSequence SequenceBuilder::from_trusted(std::vector<int> values) {
  assert(validate_skolem(values));
  return SkolemSequence(SkolemSequence::Trusted{}, std::move(values));
}

}  // namespace skolemgen
