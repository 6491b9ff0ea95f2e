#include "output_record.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

#include "skolemgen/text.hpp"

namespace skolemgen::cli {

std::string_view to_string(OutputRecord::Kind kind) {
  switch (kind) {
    case OutputRecord::Kind::skolem: return "skolem";
    case OutputRecord::Kind::open_state: return "open-state";
    case OutputRecord::Kind::count: return "count";
    case OutputRecord::Kind::sts: return "sts";
  }
  return "unknown";
}

OutputRecord make_record(const SkolemSequence& w) {
  return {OutputRecord::Kind::skolem, to_text(w), w.order()};
}

OutputRecord make_record(const OpenState& state) {
  return {OutputRecord::Kind::open_state, to_text(state), state.order()};
}

OutputRecord make_record(const LevelCount& count) {
  return {OutputRecord::Kind::count,
          "n=" + std::to_string(count.n) + " count=" + std::to_string(count.count), count.n};
}

OutputRecord make_record(const sts::TripleSystem& system) {
  return {OutputRecord::Kind::sts, sts::format_system(system), static_cast<int>((system.v - 1) / 6)};
}

namespace {

template <class T>
T parse_number(std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad number '" + std::string(text) + "'");
  return value;
}

LevelCount parse_count(std::string_view text) {
  constexpr std::string_view n_key = "n=", count_key = " count=";
  const auto split = text.find(count_key);
  if (text.rfind(n_key, 0) != 0 || split == std::string_view::npos)
    throw std::invalid_argument("bad count line '" + std::string(text) + "'");
  return {parse_number<int>(text.substr(n_key.size(), split - n_key.size())),
          parse_number<std::uint64_t>(text.substr(split + count_key.size()))};
}

}  // namespace

Payload parse_payload(const OutputRecord& record) {
  switch (record.kind) {
    case OutputRecord::Kind::skolem: return parse_skolem(record.payload);
    case OutputRecord::Kind::open_state: return state_from_text(record.payload);
    case OutputRecord::Kind::count: return parse_count(record.payload);
    case OutputRecord::Kind::sts: return sts::parse_system(record.payload);
  }
  throw std::invalid_argument("unknown record kind");
}

std::string to_ndjson(const SkolemSequence& w) {
  nlohmann::json obj;
  obj["order"] = w.order();
  obj["values"] = w.values();
  return obj.dump();
}

SkolemSequence skolem_from_ndjson(std::string_view line) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
    auto values = obj.at("values").get<std::vector<int>>();
    const int order = obj.at("order").get<int>();
    SkolemSequence w(std::move(values));
    if (w.order() != order) throw std::invalid_argument("order field disagrees with values");
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad ndjson record: ") + e.what());
  }
}

}  // namespace skolemgen::cli
