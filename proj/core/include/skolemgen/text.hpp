#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skolemgen/open_state.hpp"
#include "skolemgen/sequence.hpp"

namespace skolemgen {

/// Malformed text: bad token, empty token, number out of range.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar: comma-separated tokens `k` or `*k`, k a positive decimal integer.
// Whitespace anywhere is ignored. The empty string is the empty sequence.

std::vector<Entry> parse_entries(std::string_view text);
std::string format_entries(std::span<const Entry> entries);

std::string to_text(const OpenState& state);
std::string to_text(const SkolemSequence& w);
std::string to_text(std::span<const int> values);

/// Parses and validates a decorated sequence. Throws ParseError or InvalidState.
OpenState state_from_text(std::string_view text);

/// Plain values (no stars), validated as a closed state. Throws InvalidState.
OpenState state_from_sequence(std::span<const int> values);

/// Throws ParseError on syntax (including stars), std::invalid_argument if
/// the values are not a Skolem sequence.
SkolemSequence parse_skolem(std::string_view text);

}  // namespace skolemgen
