// FFT path for the full autocorrelation spectrum.
//
// Writing A = Σ_p a_p e_p with e_0 = 1, e_1 = i, e_2 = j, e_3 = k and real
// component arrays a_p, the conjugate has components ā_0 = a_0, ā_q = -a_q.
// Each term of the right correlation expands to
//
//   Σ_{p,q} (e_p e_q) · Σ_x a_p(x) ā_q(x+τ),
//
// and of the left correlation to the same inner sums with e_q e_p. The inner
// sums are real periodic cross-correlations whose DFT is conj(F[a_p])·F[ā_q].
// Since the recombination is linear we add the 16 products into four output
// spectra in the frequency domain and run only four inverse transforms.

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>

#include <fftw3.h>

#include "quatseq/correlation.hpp"

namespace quatseq {

namespace {

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwDeleter>;

template <typename T>
FftwBuffer<T> fftw_buffer(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1)));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

struct PlanDeleter {
  void operator()(fftw_plan p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter>;

// The FFTW planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

CorrelationSpectrum fft_autocorr_all(const QuatArray& a, Side side) {
  if (a.size() == 0) throw std::invalid_argument("spectrum of an empty array");
  const auto& dims = a.dims();
  const std::size_t n = a.size();
  const std::size_t half = n / dims.back() * (dims.back() / 2 + 1);
  std::vector<int> fft_dims(dims.begin(), dims.end());
  const int rank = static_cast<int>(fft_dims.size());

  auto real = fftw_buffer<double>(n);
  auto freq = fftw_buffer<fftw_complex>(half);
  Plan forward;
  Plan backward;
  {
    std::lock_guard lock(planner_mutex());
    forward.reset(fftw_plan_dft_r2c(rank, fft_dims.data(), real.get(), freq.get(), FFTW_ESTIMATE));
    backward.reset(fftw_plan_dft_c2r(rank, fft_dims.data(), freq.get(), real.get(), FFTW_ESTIMATE));
  }
  if (!forward || !backward) throw std::runtime_error("FFTW planning failed");

  // Transforms of the four component arrays of A.
  std::vector<std::vector<std::complex<double>>> comp(4, std::vector<std::complex<double>>(half));
  for (int p = 0; p < 4; ++p) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto e = embed(a[x]);
      const std::int64_t c[4] = {e.w, e.x, e.y, e.z};
      real[x] = static_cast<double>(c[p]);
    }
    fftw_execute(forward.get());
    for (std::size_t f = 0; f < half; ++f) comp[p][f] = {freq[f][0], freq[f][1]};
  }

  std::vector<std::vector<std::complex<double>>> out(4, std::vector<std::complex<double>>(half));
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      const auto& prod = side == Side::right ? detail::kBasisTable[p][q] : detail::kBasisTable[q][p];
      // Sign of e_p e_q combined with the sign of the conjugated component.
      double sign = prod.negative ? -1.0 : 1.0;
      if (q != 0) sign = -sign;
      auto& dst = out[static_cast<int>(prod.axis)];
      for (std::size_t f = 0; f < half; ++f) dst[f] += sign * std::conj(comp[p][f]) * comp[q][f];
    }
  }

  CorrelationSpectrum spectrum;
  spectrum.dims = dims;
  spectrum.side = side;
  spectrum.method = SpectrumMethod::fft;
  spectrum.values.resize(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (int c = 0; c < 4; ++c) {
    for (std::size_t f = 0; f < half; ++f) {
      freq[f][0] = out[c][f].real();
      freq[f][1] = out[c][f].imag();
    }
    fftw_execute(backward.get());
    for (std::size_t x = 0; x < n; ++x) {
      const double v = real[x] * scale;
      const double r = std::nearbyint(v);
      if (!(std::abs(v - r) <= 0.25)) {
        throw NumericalError("FFT correlation component " + std::to_string(v) +
                             " is not within 0.25 of an integer");
      }
      auto& dst = spectrum.values[x];
      const auto iv = static_cast<std::int64_t>(r);
      switch (c) {
        case 0: dst.w = iv; break;
        case 1: dst.x = iv; break;
        case 2: dst.y = iv; break;
        default: dst.z = iv; break;
      }
    }
  }
  finalize_spectrum(spectrum);
  return spectrum;
}

}  // namespace quatseq
