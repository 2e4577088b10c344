#pragma once

// Generators for perfect and near-perfect sequences and arrays over the unit
// alphabet. Every index function has the form
//
//   S = i^⌊·⌋ j^⌊·⌋ [k^⌊·⌋]
//
// evaluated as: integer floor quotient, reduce mod 4, take the power, then
// multiply the factors left to right in the written order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatseq/sequence.hpp"

namespace quatseq {

/// Length 2^n: s_a = i^⌊a²/2^(n-1)⌋ j^⌊2a²/2^(n-1)⌋. Requires 1 <= n <= 24.
QuatSequence construct_seq_2n(int n);

/// The 8 x 8 array S_{a,b} = i^(ab) j^⌊ab/2⌋.
QuatArray construct_aop_array();

/// 2^n x 2^n array S_{a,b} = i^⌊4ab/2^n⌋ j^⌊4a²b²/2^n⌋. Requires 2 <= n <= 12.
QuatArray construct_2d(int n);

/// 4-D array with all axes 2^(n+1):
/// S_{a,b,c,d} = i^⌊ab/2^(n-1)⌋ j^⌊bc/2^(n-1)⌋ k^⌊cd/2^(n-1)⌋. Requires 1 <= n <= 5.
QuatArray construct_4d_iii(int n);

/// Same index function on dims (2^n, 2^n, 2^(n+1), 2^(n+1)). Requires 1 <= n <= 5.
QuatArray construct_4d_iv(int n);

/// Sign vector for the template [-i, s, k, reverse(s)] where
/// s_t = alpha_t · (j if t is even, else i).
struct TemplateSpec {
  std::vector<int> alpha;

  std::size_t length() const { return 2 * alpha.size() + 2; }
  friend bool operator==(const TemplateSpec&, const TemplateSpec&) = default;
};

/// Throws std::invalid_argument unless alpha has even length >= 2 and only ±1.
QuatSequence template_sequence(const TemplateSpec& spec);

/// Inverse of template_sequence; nullopt if seq does not have the template shape.
std::optional<TemplateSpec> extract_template(const QuatSequence& seq);

enum class ProductOrder { first_left, first_right };

/// u_t = s1[t mod L1] · s2[t mod L2] (first argument on the left by default).
/// Throws std::invalid_argument unless gcd(L1, L2) = 1. Perfection of the
/// result is not implied; verify it.
QuatSequence coprime_product(const QuatSequence& s1, const QuatSequence& s2,
                             ProductOrder order = ProductOrder::first_left);

/// Construction names accepted by the CLI.
inline constexpr const char* kConstructionNames[] = {"seq2n", "aop8x8", "arr2d", "arr4d-iii",
                                                     "arr4d-iv", "template", "product"};

/// Parameterised constructions (seq2n, aop8x8, arr2d, arr4d-iii, arr4d-iv) by name.
/// Returns a 1-D array for seq2n. Throws std::invalid_argument for unknown names.
QuatArray construct_by_name(const std::string& name, int n);

}  // namespace quatseq
