#pragma once

// Index-function arrays S_{a,b} = i^⌊f(a,b)/c⌋ j^⌊g(a,b)/d⌋ with bivariate
// integer polynomials f, g, and the array orthogonality property (AOP) test.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quatseq/sequence.hpp"

namespace quatseq {

struct SearchReport;

struct Monomial {
  int deg_a = 0;
  int deg_b = 0;
  std::int64_t coeff = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct BivariatePolynomial {
  std::vector<Monomial> terms;

  std::int64_t operator()(std::int64_t a, std::int64_t b) const;
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
};

/// e.g. "3*a^2*b+a*b+7"; "0" for the empty polynomial.
std::string to_string(const BivariatePolynomial& p);

struct PolynomialIndexSpec {
  BivariatePolynomial f;
  BivariatePolynomial g;
  std::int64_t c = 1;
  std::int64_t d = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;

  friend bool operator==(const PolynomialIndexSpec&, const PolynomialIndexSpec&) = default;
};

std::string to_string(const PolynomialIndexSpec& spec);

/// Throws std::invalid_argument if c or d < 1 or a dimension is zero.
QuatArray build_index_array(const PolynomialIndexSpec& spec);

/// Two readings of the AOP for an array with columns A[·, b]:
///   plain:  Σ_a A[a,b1]·conj(A[a,b2]) = 0 for every pair of distinct columns;
///   cyclic: Σ_b Σ_a A[a,b]·conj(A[a,(b+τ) mod cols]) = 0 for every column
///           shift τ ≠ 0 (column correlations summed over all columns).
/// plain implies cyclic.
struct AopResult {
  bool plain = false;
  bool cyclic = false;
};

/// Throws std::invalid_argument for arrays that are not 2-D.
AopResult aop_check(const QuatArray& array);

enum class AopVariant { plain, cyclic, either };

std::string to_string(AopVariant v);
AopVariant parse_aop_variant(const std::string& text);

/// Array passes the chosen AOP variant and its row-major flattening is perfect.
bool is_aop_hit(const QuatArray& array, AopVariant variant);
bool is_aop_hit(const PolynomialIndexSpec& spec, AopVariant variant);

struct AopSearchOptions {
  std::size_t samples = 10000;
  /// Coefficients are drawn from [0, coeff_bound).
  std::int64_t coeff_bound = 13;
  /// Denominators are drawn from [1, max_denominator].
  std::int64_t max_denominator = 12;
  /// Monomials a^p b^q with 0 <= p, q <= max_degree.
  int max_degree = 2;
  AopVariant variant = AopVariant::plain;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// Sizes rows x cols with 2 <= rows, cols <= 32 and rows·cols > 16.
std::vector<std::pair<std::size_t, std::size_t>> default_aop_sizes();

/// Deterministic draw for sample `sample` of size slot `size_index`.
PolynomialIndexSpec random_index_spec(std::size_t rows, std::size_t cols,
                                      const AopSearchOptions& opts, std::size_t size_index,
                                      std::size_t sample);

SearchReport aop_random_search(const std::vector<std::pair<std::size_t, std::size_t>>& sizes,
                               const AopSearchOptions& opts = {});

}  // namespace quatseq
