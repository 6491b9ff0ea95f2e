#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace skolemgen {

/// Reason a plain integer sequence fails to be a Skolem sequence.
/// Checks run in declaration order; the first failing one is reported.
enum class SkolemDefect {
  empty,        // order 0 is not a Skolem sequence
  odd_length,
  value_range,  // some entry outside 1..n
  count,        // some value does not occur exactly twice
  gap,          // the two copies of k are not k positions apart
};

std::string_view to_string(SkolemDefect defect);

std::optional<SkolemDefect> find_skolem_defect(std::span<const int> values);

/// Direct check of the definition: the multiset is {1,1,...,n,n} and the
/// copies of k sit at positions i < j with j - i = k.
bool validate_skolem(std::span<const int> values);

/// A plain integer sequence known to be a Skolem sequence.
class SkolemSequence {
 public:
  /// Throws std::invalid_argument naming the defect.
  explicit SkolemSequence(std::vector<int> values);

  const std::vector<int>& values() const noexcept { return values_; }
  int order() const noexcept { return static_cast<int>(values_.size() / 2); }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const SkolemSequence&, const SkolemSequence&) = default;
  friend auto operator<=>(const SkolemSequence&, const SkolemSequence&) = default;

 private:
  struct Trusted {};
  SkolemSequence(Trusted, std::vector<int> values) : values_(std::move(values)) {}
  friend SkolemSequence reverse(const SkolemSequence& w);
  friend class SequenceBuilder;

  std::vector<int> values_;
};

/// Reversal keeps every gap, so the result is again a Skolem sequence.
SkolemSequence reverse(const SkolemSequence& w);

/// Wraps sequences produced by the engine, which are valid by construction.
/// Validation is only repeated in debug builds.
class SequenceBuilder {
 public:
  static SkolemSequence from_trusted(std::vector<int> values);
};

}  // namespace skolemgen
