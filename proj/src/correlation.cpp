#include "quatseq/correlation.hpp"

#include <array>

#include "correlation_kernel.hpp"
#include "quatseq/parallel.hpp"

namespace quatseq {

std::string to_string(Side side) { return side == Side::left ? "left" : "right"; }

BudgetExceeded::BudgetExceeded(std::size_t size, std::size_t budget)
    : std::runtime_error("input has " + std::to_string(size) +
                         " elements, at or above the naive-path budget of " +
                         std::to_string(budget) + "; use the FFT path or sampled shifts"),
      size_(size),
      budget_(budget) {}

namespace detail {

std::vector<std::uint8_t> to_codes(std::span<const UnitQuat> elems) {
  std::vector<std::uint8_t> codes(elems.size());
  for (std::size_t n = 0; n < elems.size(); ++n) codes[n] = elems[n].code();
  return codes;
}

std::vector<std::size_t> normalize_shift(std::span<const std::size_t> dims,
                                         std::span<const std::int64_t> shift) {
  if (shift.size() != dims.size()) {
    throw std::invalid_argument("shift has " + std::to_string(shift.size()) +
                                " entries for an array of rank " + std::to_string(dims.size()));
  }
  std::vector<std::size_t> out(dims.size());
  for (std::size_t a = 0; a < dims.size(); ++a) {
    const auto d = static_cast<std::int64_t>(dims[a]);
    out[a] = static_cast<std::size_t>(((shift[a] % d) + d) % d);
  }
  return out;
}

UnitCounts accumulate_shift(const CodeView& view, std::span<const std::size_t> shift,
                            const TermTable& table) {
  UnitCounts counts{};
  const std::size_t rank = view.dims.size();
  const std::size_t inner = view.dims[rank - 1];
  const std::size_t s_inner = shift[rank - 1];
  const std::size_t outer_count = view.codes.size() / inner;
  const std::uint8_t* codes = view.codes.data();

  std::vector<std::size_t> idx(rank, 0);
  for (std::size_t outer = 0; outer < outer_count; ++outer) {
    std::size_t base = 0;
    std::size_t shifted = 0;
    for (std::size_t a = 0; a + 1 < rank; ++a) {
      base += idx[a] * view.strides[a];
      std::size_t c = idx[a] + shift[a];
      if (c >= view.dims[a]) c -= view.dims[a];
      shifted += c * view.strides[a];
    }
    const std::uint8_t* x = codes + base;
    const std::uint8_t* y = codes + shifted;
    const std::size_t head = inner - s_inner;
    for (std::size_t t = 0; t < head; ++t) ++counts[table[x[t] * 8u + y[t + s_inner]]];
    for (std::size_t t = head; t < inner; ++t) ++counts[table[x[t] * 8u + y[t - head]]];

    for (std::size_t a = rank - 1; a-- > 0;) {
      if (++idx[a] < view.dims[a]) break;
      idx[a] = 0;
    }
  }
  return counts;
}

}  // namespace detail

namespace {

using detail::CodeView;

const detail::TermTable& table_for(Side side) {
  return side == Side::right ? detail::kRightTerms : detail::kLeftTerms;
}

CorrelationSpectrum naive_spectrum(const QuatArray& a, Side side, const SpectrumOptions& opts) {
  if (a.size() >= opts.naive_budget) throw BudgetExceeded(a.size(), opts.naive_budget);
  const auto codes = detail::to_codes(a.elems());
  const CodeView view{codes, a.dims(), a.strides()};
  const auto& table = table_for(side);

  CorrelationSpectrum spectrum;
  spectrum.dims = a.dims();
  spectrum.side = side;
  spectrum.method = SpectrumMethod::naive;
  spectrum.values.resize(a.size());

  // Chunks of shifts; each worker writes a disjoint slice of values.
  const std::size_t chunk = 64;
  const std::size_t chunks = (a.size() + chunk - 1) / chunk;
  parallel_for(chunks, opts.jobs, [&](std::size_t c) {
    const std::size_t end = std::min(a.size(), (c + 1) * chunk);
    for (std::size_t flat = c * chunk; flat < end; ++flat) {
      const auto shift = a.unflatten(flat);
      spectrum.values[flat] = detail::to_quat(detail::accumulate_shift(view, shift, table));
    }
  });
  finalize_spectrum(spectrum);
  return spectrum;
}

}  // namespace

const LipschitzQuat& CorrelationSpectrum::at(std::span<const std::int64_t> shift) const {
  const auto norm = detail::normalize_shift(dims, shift);
  const auto strides = row_major_strides(dims);
  std::size_t flat = 0;
  for (std::size_t a = 0; a < norm.size(); ++a) flat += norm[a] * strides[a];
  return values[flat];
}

const LipschitzQuat& CorrelationSpectrum::at(std::int64_t tau) const {
  return at(std::span<const std::int64_t>(&tau, 1));
}

std::vector<std::size_t> CorrelationSpectrum::shift_of(std::size_t flat) const {
  const auto strides = row_major_strides(dims);
  std::vector<std::size_t> shift(dims.size());
  for (std::size_t a = 0; a < dims.size(); ++a) {
    shift[a] = flat / strides[a];
    flat %= strides[a];
  }
  return shift;
}

LipschitzQuat array_autocorr(const QuatArray& a, std::span<const std::int64_t> shift, Side side) {
  if (a.size() == 0) throw std::invalid_argument("autocorrelation of an empty array");
  const auto norm = detail::normalize_shift(a.dims(), shift);
  const auto codes = detail::to_codes(a.elems());
  const CodeView view{codes, a.dims(), a.strides()};
  return detail::to_quat(detail::accumulate_shift(view, norm, table_for(side)));
}

LipschitzQuat autocorr(const QuatSequence& s, std::int64_t tau, Side side) {
  if (s.empty()) throw std::invalid_argument("autocorrelation of an empty sequence");
  const auto len = static_cast<std::int64_t>(s.size());
  const auto shift = static_cast<std::size_t>(((tau % len) + len) % len);
  const auto& table = table_for(side);
  detail::UnitCounts counts{};
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::size_t m = n + shift;
    if (m >= s.size()) m -= s.size();
    ++counts[table[s[n].code() * 8u + s[m].code()]];
  }
  return detail::to_quat(counts);
}

LipschitzQuat right_autocorr(const QuatSequence& s, std::int64_t tau) {
  return autocorr(s, tau, Side::right);
}

LipschitzQuat left_autocorr(const QuatSequence& s, std::int64_t tau) {
  return autocorr(s, tau, Side::left);
}

CorrelationSpectrum full_spectrum(const QuatArray& a, Side side, const SpectrumOptions& opts) {
  if (a.size() == 0) throw std::invalid_argument("spectrum of an empty array");
  return naive_spectrum(a, side, opts);
}

CorrelationSpectrum full_spectrum(const QuatSequence& s, Side side, const SpectrumOptions& opts) {
  if (s.empty()) throw std::invalid_argument("spectrum of an empty sequence");
  return naive_spectrum(QuatArray::from_sequence(s), side, opts);
}

CorrelationSpectrum fft_autocorr_all(const QuatSequence& s, Side side) {
  if (s.empty()) throw std::invalid_argument("spectrum of an empty sequence");
  return fft_autocorr_all(QuatArray::from_sequence(s), side);
}

CorrelationSpectrum auto_spectrum(const QuatArray& a, Side side, const SpectrumOptions& opts) {
  if (a.size() < opts.naive_budget) return full_spectrum(a, side, opts);
  return fft_autocorr_all(a, side);
}

CorrelationSpectrum auto_spectrum(const QuatSequence& s, Side side, const SpectrumOptions& opts) {
  if (s.empty()) throw std::invalid_argument("spectrum of an empty sequence");
  return auto_spectrum(QuatArray::from_sequence(s), side, opts);
}

bool is_perfect(const QuatArray& a, Side side, const SpectrumOptions& opts) {
  if (a.size() == 0) throw std::invalid_argument("perfection test on an empty array");
  if (a.size() >= opts.naive_budget) return fft_autocorr_all(a, side).perfect;
  const auto codes = detail::to_codes(a.elems());
  const CodeView view{codes, a.dims(), a.strides()};
  const auto& table = table_for(side);
  for (std::size_t flat = 1; flat < a.size(); ++flat) {
    const auto shift = a.unflatten(flat);
    if (!detail::to_quat(detail::accumulate_shift(view, shift, table)).is_zero()) return false;
  }
  return true;
}

bool is_perfect(const QuatSequence& s, Side side, const SpectrumOptions& opts) {
  if (s.empty()) throw std::invalid_argument("perfection test on an empty sequence");
  if (s.size() >= opts.naive_budget) return is_perfect(QuatArray::from_sequence(s), side, opts);
  for (std::size_t tau = 1; tau < s.size(); ++tau) {
    if (!autocorr(s, static_cast<std::int64_t>(tau), side).is_zero()) return false;
  }
  return true;
}

std::size_t zcz(const CorrelationSpectrum& spectrum) {
  if (spectrum.rank() != 1) throw std::invalid_argument("zero correlation zone needs a 1-D spectrum");
  std::size_t z = 0;
  while (z + 1 < spectrum.values.size() && spectrum.values[z + 1].is_zero()) ++z;
  return z;
}

void finalize_spectrum(CorrelationSpectrum& spectrum) {
  const auto& v = spectrum.values;
  spectrum.peak = v.empty() ? LipschitzQuat{} : v[0];
  spectrum.perfect = true;
  for (std::size_t n = 1; n < v.size(); ++n) {
    if (!v[n].is_zero()) {
      spectrum.perfect = false;
      break;
    }
  }
  if (spectrum.rank() == 1) {
    bool odd = true;
    for (std::size_t n = 1; n < v.size(); n += 2) odd = odd && v[n].is_zero();
    spectrum.odd_perfect = odd;
    spectrum.zcz = zcz(spectrum);
  } else {
    spectrum.odd_perfect.reset();
    spectrum.zcz.reset();
  }
}

FloatQuat float_autocorr(const FloatQuatSequence& s, std::int64_t tau, Side side) {
  if (s.elems.empty()) throw std::invalid_argument("autocorrelation of an empty sequence");
  const auto len = static_cast<std::int64_t>(s.size());
  const auto shift = static_cast<std::size_t>(((tau % len) + len) % len);
  FloatQuat sum;
  for (std::size_t n = 0; n < s.size(); ++n) {
    const auto& a = s.elems[n];
    const auto& b = s.elems[(n + shift) % s.size()];
    sum = sum + (side == Side::right ? a * float_conj(b) : float_conj(b) * a);
  }
  return sum;
}

bool is_perfect(const FloatQuatSequence& s, Side side, double tol) {
  for (std::size_t tau = 1; tau < s.size(); ++tau) {
    if (!approx_zero(float_autocorr(s, static_cast<std::int64_t>(tau), side), tol)) return false;
  }
  return true;
}

}  // namespace quatseq
