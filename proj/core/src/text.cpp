#include "skolemgen/text.hpp"

#include <cctype>
#include <charconv>

namespace skolemgen {

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last || value < 1)
    throw ParseError("bad token '" + std::string(token) + "' in '" + std::string(whole) + "'");
  return value;
}

}  // namespace

std::vector<Entry> parse_entries(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

  std::vector<Entry> entries;
  if (compact.empty()) return entries;
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    if (!token.empty() && token.front() == '*')
      entries.push_back(Entry::open(parse_positive(token.substr(1), text)));
    else
      entries.push_back(Entry::closed(parse_positive(token, text)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return entries;
}

std::string format_entries(std::span<const Entry> entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i != 0) out.push_back(',');
    if (entries[i].is_open()) out.push_back('*');
    out += std::to_string(entries[i].value);
  }
  return out;
}

std::string to_text(const OpenState& state) { return format_entries(state.entries()); }

std::string to_text(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_text(const SkolemSequence& w) { return to_text(std::span<const int>(w.values())); }

OpenState state_from_text(std::string_view text) { return OpenState(parse_entries(text)); }

OpenState state_from_sequence(std::span<const int> values) {
  std::vector<Entry> entries;
  entries.reserve(values.size());
  for (int v : values) entries.push_back(Entry::closed(v));
  return OpenState(std::move(entries));
}

SkolemSequence parse_skolem(std::string_view text) {
  std::vector<int> values;
  for (const Entry& e : parse_entries(text)) {
    if (e.is_open()) throw ParseError("unexpected open entry in plain sequence '" + std::string(text) + "'");
    values.push_back(e.value);
  }
  return SkolemSequence(std::move(values));
}

}  // namespace skolemgen
