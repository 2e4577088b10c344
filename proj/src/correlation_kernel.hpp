#pragma once

// Shared inner loop of the exact correlation paths. A correlation term of two
// units is itself a unit, so a sum is tallied as eight counters and converted
// to a LipschitzQuat once at the end.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "quatseq/quaternion.hpp"

namespace quatseq::detail {

using TermTable = std::array<std::uint8_t, 64>;
using UnitCounts = std::array<std::int64_t, 8>;

constexpr TermTable build_term_table(bool right) {
  TermTable t{};
  for (std::uint8_t p = 0; p < 8; ++p) {
    for (std::uint8_t q = 0; q < 8; ++q) {
      const auto a = UnitQuat::from_code(p);
      const auto b = unit_conj(UnitQuat::from_code(q));
      t[p * 8u + q] = (right ? a * b : b * a).code();
    }
  }
  return t;
}

/// [x][y] -> x · conj(y)
inline constexpr TermTable kRightTerms = build_term_table(true);
/// [x][y] -> conj(y) · x
inline constexpr TermTable kLeftTerms = build_term_table(false);

inline LipschitzQuat to_quat(const UnitCounts& c) {
  return {c[0] - c[4], c[1] - c[5], c[2] - c[6], c[3] - c[7]};
}

struct CodeView {
  std::span<const std::uint8_t> codes;
  std::span<const std::size_t> dims;
  std::span<const std::size_t> strides;
};

std::vector<std::uint8_t> to_codes(std::span<const UnitQuat> elems);
std::vector<std::size_t> normalize_shift(std::span<const std::size_t> dims,
                                         std::span<const std::int64_t> shift);

/// Tally of table[A[x]][A[x+shift]] over all x; shift already normalized.
UnitCounts accumulate_shift(const CodeView& view, std::span<const std::size_t> shift,
                            const TermTable& table);

}  // namespace quatseq::detail
