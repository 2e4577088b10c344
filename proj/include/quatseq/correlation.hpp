#pragma once

// Periodic left/right autocorrelation over the unit alphabet.
//
//   right:  θ(τ) = Σ_x  A[x] · conj(A[x+τ])
//   left:   θ(τ) = Σ_x  conj(A[x+τ]) · A[x]
//
// All sums are exact. Shifts are reduced into [0, dim) per axis, so negative
// shifts are accepted.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatseq/quaternion.hpp"
#include "quatseq/sequence.hpp"

namespace quatseq {

enum class Side { left, right };

std::string to_string(Side side);

/// The naive spectrum path refuses inputs this large; the FFT path has no limit.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t size, std::size_t budget);
  std::size_t size() const { return size_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t size_;
  std::size_t budget_;
};

/// An FFT output component landed too far from an integer to round safely.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SpectrumMethod { naive, fft };

struct SpectrumOptions {
  /// Naive path runs only for inputs with fewer than this many elements.
  std::size_t naive_budget = std::size_t{1} << 20;
  /// Worker threads for the naive path; 0 picks hardware concurrency.
  unsigned jobs = 1;
};

struct CorrelationSpectrum {
  std::vector<std::size_t> dims;
  Side side = Side::right;
  /// One value per shift vector, row-major in the shift coordinates.
  std::vector<LipschitzQuat> values;
  LipschitzQuat peak;
  bool perfect = false;
  /// 1-D only: θ(τ) = 0 for every odd τ.
  std::optional<bool> odd_perfect;
  /// 1-D only: largest z with θ(τ) = 0 for 1 <= τ <= z.
  std::optional<std::size_t> zcz;
  SpectrumMethod method = SpectrumMethod::naive;

  std::size_t rank() const { return dims.size(); }
  const LipschitzQuat& at(std::span<const std::int64_t> shift) const;
  const LipschitzQuat& at(std::int64_t tau) const;
  std::vector<std::size_t> shift_of(std::size_t flat) const;
};

LipschitzQuat right_autocorr(const QuatSequence& s, std::int64_t tau);
LipschitzQuat left_autocorr(const QuatSequence& s, std::int64_t tau);
LipschitzQuat autocorr(const QuatSequence& s, std::int64_t tau, Side side);

/// Throws std::invalid_argument when shift.size() != A.rank().
LipschitzQuat array_autocorr(const QuatArray& a, std::span<const std::int64_t> shift, Side side);
inline LipschitzQuat array_autocorr(const QuatArray& a, std::initializer_list<std::int64_t> shift,
                                    Side side) {
  return array_autocorr(a, std::span<const std::int64_t>(shift.begin(), shift.size()), side);
}

/// Naive O(N^2) spectrum. Throws BudgetExceeded when size() >= naive_budget.
CorrelationSpectrum full_spectrum(const QuatSequence& s, Side side, const SpectrumOptions& opts = {});
CorrelationSpectrum full_spectrum(const QuatArray& a, Side side, const SpectrumOptions& opts = {});

/// All shifts at once from 16 real periodic cross-correlations computed with
/// d-dimensional FFTs. Results are rounded to integers; throws NumericalError
/// if any component is more than 0.25 away from an integer.
CorrelationSpectrum fft_autocorr_all(const QuatArray& a, Side side);
CorrelationSpectrum fft_autocorr_all(const QuatSequence& s, Side side);

/// Naive below the budget, FFT otherwise.
CorrelationSpectrum auto_spectrum(const QuatArray& a, Side side, const SpectrumOptions& opts = {});
CorrelationSpectrum auto_spectrum(const QuatSequence& s, Side side, const SpectrumOptions& opts = {});

/// Every nonzero shift gives zero. Stops at the first nonzero value on the
/// naive path; switches to the FFT path above the budget.
bool is_perfect(const QuatSequence& s, Side side, const SpectrumOptions& opts = {});
bool is_perfect(const QuatArray& a, Side side, const SpectrumOptions& opts = {});

/// Largest z with the spectrum zero on shifts 1..z. Requires a 1-D spectrum.
std::size_t zcz(const CorrelationSpectrum& spectrum);

FloatQuat float_autocorr(const FloatQuatSequence& s, std::int64_t tau, Side side);
bool is_perfect(const FloatQuatSequence& s, Side side, double tol = kFloatTolerance);

/// Fills perfect / odd_perfect / zcz / peak from values.
void finalize_spectrum(CorrelationSpectrum& spectrum);

}  // namespace quatseq
