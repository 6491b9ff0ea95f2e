#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skolemgen/sequence.hpp"

namespace skolemgen::sts {

using Triple = std::array<std::int64_t, 3>;

/// v points 0..v-1 and a list of blocks. The STS property is checked by
/// verify(), never assumed.
struct TripleSystem {
  std::int64_t v = 0;
  std::vector<Triple> blocks;

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
};

/// One triple (x, x + k, x + j + n) per value k of w, where k sits at
/// positions i < j (1-based). Ordered by first occurrence i; no reduction.
/// Throws std::out_of_range unless 0 <= x <= 6n.
std::vector<Triple> base_blocks(const SkolemSequence& w, std::int64_t x = 0);

/// Validates `values` first; throws std::invalid_argument if not Skolem.
std::vector<Triple> base_blocks(std::span<const int> values, std::int64_t x = 0);

/// Translates every base block by t = 0..v-1 with v = 6n + 1, reducing mod v.
/// Duplicate blocks are kept.
TripleSystem develop(std::span<const Triple> base, int order);

/// Number of block-pair incidences per unordered point pair, row-major over
/// i < j. Blocks with repeated or out-of-range points are skipped.
std::vector<std::uint32_t> pair_occurrences(const TripleSystem& system);

/// Every unordered pair lies in exactly one block and |blocks| = v(v-1)/6.
bool verify(const TripleSystem& system);

/// "v=<v>" header, then one block per line as three space-separated integers.
std::string format_system(const TripleSystem& system);

/// Inverse of format_system. Throws std::invalid_argument on malformed text.
TripleSystem parse_system(std::string_view text);

}  // namespace skolemgen::sts
