#include "skolemgen/sts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skolemgen::sts {

std::vector<Triple> base_blocks(const SkolemSequence& w, std::int64_t x) {
  const std::int64_t n = w.order();
  if (x < 0 || x > 6 * n) throw std::out_of_range("x must lie in 0..6n");
  const auto& s = w.values();
  std::vector<Triple> blocks;
  blocks.reserve(n);
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int k = s[i];
    if (seen[k]) continue;
    seen[k] = true;
    const auto j = static_cast<std::int64_t>(i) + 1 + k;  // 1-based position of the second copy
    blocks.push_back({x, x + k, x + j + n});
  }
  return blocks;
}

std::vector<Triple> base_blocks(std::span<const int> values, std::int64_t x) {
  return base_blocks(SkolemSequence(std::vector<int>(values.begin(), values.end())), x);
}

TripleSystem develop(std::span<const Triple> base, int order) {
  TripleSystem system;
  system.v = 6 * static_cast<std::int64_t>(order) + 1;
  system.blocks.reserve(base.size() * static_cast<std::size_t>(system.v));
  const auto reduce = [v = system.v](std::int64_t a) { return ((a % v) + v) % v; };
  for (const Triple& b : base)
    for (std::int64_t t = 0; t < system.v; ++t)
      system.blocks.push_back({reduce(b[0] + t), reduce(b[1] + t), reduce(b[2] + t)});
  return system;
}

namespace {

std::size_t pair_index(std::int64_t v, std::int64_t i, std::int64_t j) {
  // i < j; rows of decreasing length v-1, v-2, ...
  return static_cast<std::size_t>(i * (2 * v - i - 1) / 2 + (j - i - 1));
}

}  // namespace

std::vector<std::uint32_t> pair_occurrences(const TripleSystem& system) {
  const std::int64_t v = system.v;
  std::vector<std::uint32_t> counts(v > 1 ? static_cast<std::size_t>(v * (v - 1) / 2) : 0, 0);
  for (Triple b : system.blocks) {
    std::sort(b.begin(), b.end());
    if (b[0] < 0 || b[2] >= v || b[0] == b[1] || b[1] == b[2]) continue;
    ++counts[pair_index(v, b[0], b[1])];
    ++counts[pair_index(v, b[0], b[2])];
    ++counts[pair_index(v, b[1], b[2])];
  }
  return counts;
}

bool verify(const TripleSystem& system) {
  const std::int64_t v = system.v;
  if (v < 1 || (v * (v - 1)) % 6 != 0) return false;
  if (static_cast<std::int64_t>(system.blocks.size()) != v * (v - 1) / 6) return false;
  for (Triple b : system.blocks) {
    std::sort(b.begin(), b.end());
    if (b[0] < 0 || b[2] >= v || b[0] == b[1] || b[1] == b[2]) return false;
  }
  const auto counts = pair_occurrences(system);
  return std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c == 1; });
}

std::string format_system(const TripleSystem& system) {
  std::string out = "v=" + std::to_string(system.v) + "\n";
  for (const Triple& b : system.blocks)
    out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " + std::to_string(b[2]) + "\n";
  return out;
}

TripleSystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("v=", 0) != 0)
    throw std::invalid_argument("missing 'v=<v>' header");
  TripleSystem system;
  try {
    std::size_t used = 0;
    system.v = std::stoll(line.substr(2), &used);
    if (used != line.size() - 2) throw std::invalid_argument("trailing text");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad header '" + line + "'");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    Triple b{};
    std::string extra;
    if (!(fields >> b[0] >> b[1] >> b[2]) || (fields >> extra))
      throw std::invalid_argument("bad block line '" + line + "'");
    system.blocks.push_back(b);
  }
  return system;
}

}  // namespace skolemgen::sts
