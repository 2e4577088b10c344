#pragma once

// Transformations of unit sequences that map perfect sequences to perfect
// sequences, used to quotient the exhaustive search.
//
// Value maps act on every element: negation (s -> -s), the 24 automorphisms
// of Q8 (signed permutations of i, j, k preserving ij = k), and conjugation
// (s -> s*, which swaps left and right correlation). Index maps act on
// positions: cyclic rotation, reversal, and decimation by units mod L.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quatseq/sequence.hpp"

namespace quatseq {

enum class Symmetry : std::uint32_t {
  negation = 1u << 0,
  rotation = 1u << 1,
  reversal = 1u << 2,
  automorphism = 1u << 3,
  conjugation = 1u << 4,
  decimation = 1u << 5,
};

inline constexpr Symmetry kAllSymmetries[] = {Symmetry::negation,     Symmetry::rotation,
                                              Symmetry::reversal,     Symmetry::automorphism,
                                              Symmetry::conjugation, Symmetry::decimation};

class SymmetrySet {
 public:
  constexpr SymmetrySet() = default;
  constexpr SymmetrySet(std::initializer_list<Symmetry> syms) {
    for (auto s : syms) bits_ |= static_cast<std::uint32_t>(s);
  }
  static constexpr SymmetrySet none() { return {}; }
  static constexpr SymmetrySet all() {
    return {Symmetry::negation, Symmetry::rotation, Symmetry::reversal,
            Symmetry::automorphism, Symmetry::conjugation, Symmetry::decimation};
  }

  constexpr bool contains(Symmetry s) const { return (bits_ & static_cast<std::uint32_t>(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(Symmetry s) { bits_ |= static_cast<std::uint32_t>(s); }
  constexpr std::uint32_t bits() const { return bits_; }

  friend constexpr bool operator==(SymmetrySet, SymmetrySet) = default;

 private:
  std::uint32_t bits_ = 0;
};

std::string to_string(Symmetry s);
/// Comma-separated names, or "none".
std::string to_string(SymmetrySet set);
/// Inverse of to_string(SymmetrySet); throws std::invalid_argument on unknown names.
SymmetrySet parse_symmetry_set(const std::string& text);

/// Symmetries enabled for the exhaustive search unless overridden. Each one
/// is checked by gate_symmetry in the test suite.
SymmetrySet default_symmetries();

/// A permutation of the eight unit codes.
using ValueMap = std::array<std::uint8_t, 8>;

/// The 24 automorphisms of Q8, identity first.
const std::vector<ValueMap>& q8_automorphisms();

QuatSequence apply(const ValueMap& map, const QuatSequence& seq);

/// Every sequence reachable from seq under the group generated by `set`,
/// sorted and without duplicates.
std::vector<QuatSequence> orbit(const QuatSequence& seq, SymmetrySet set);

/// Lexicographically smallest member of the orbit (by unit code order).
QuatSequence canonical_form(const QuatSequence& seq, SymmetrySet set);

/// All perfect sequences of the given length over {±i, ±j, ±k}, by plain
/// enumeration of all 6^length candidates and the correlation module.
std::vector<QuatSequence> brute_force_perfect(std::size_t length);

/// Oracle gate: for every length 2..max_length (even), the set of perfect
/// sequences found by brute force is closed under each generator of `sym`.
bool gate_symmetry(Symmetry sym, std::size_t max_length = 6);

}  // namespace quatseq
