#include "quatseq/aop_search.hpp"

#include <array>
#include <limits>
#include <random>
#include <stdexcept>

#include "quatseq/correlation.hpp"
#include "quatseq/search.hpp"
#include "search_runner.hpp"

namespace quatseq {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int n = 0; n < exp; ++n) out *= base;
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const auto q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

std::string variable_part(const Monomial& m) {
  std::string out;
  auto append = [&](char var, int deg) {
    if (deg == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (deg > 1) out += '^' + std::to_string(deg);
  };
  append('a', m.deg_a);
  append('b', m.deg_b);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, bound) by rejection, identical on every standard library.
std::int64_t draw_below(std::mt19937_64& rng, std::int64_t bound) {
  const auto b = static_cast<std::uint64_t>(bound);
  const std::uint64_t reject_from = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % b;
  for (;;) {
    const auto x = rng();
    if (x < reject_from) return static_cast<std::int64_t>(x % b);
  }
}

BivariatePolynomial random_polynomial(std::mt19937_64& rng, const AopSearchOptions& opts) {
  BivariatePolynomial p;
  for (int da = 0; da <= opts.max_degree; ++da) {
    for (int db = 0; db <= opts.max_degree; ++db) {
      const auto c = draw_below(rng, opts.coeff_bound);
      if (c != 0) p.terms.push_back({da, db, c});
    }
  }
  return p;
}

bool is_zero(const std::array<std::int64_t, 4>& acc) { return acc == std::array<std::int64_t, 4>{}; }

void add_term(std::array<std::int64_t, 4>& acc, UnitQuat x, UnitQuat y) {
  const auto p = unit_mul(x, unit_conj(y));
  acc[static_cast<std::size_t>(p.axis())] += p.negative() ? -1 : 1;
}

}  // namespace

std::int64_t BivariatePolynomial::operator()(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0;
  for (const auto& m : terms) out += m.coeff * ipow(a, m.deg_a) * ipow(b, m.deg_b);
  return out;
}

std::string to_string(const BivariatePolynomial& p) {
  std::string out;
  for (const auto& m : p.terms) {
    if (m.coeff == 0) continue;
    const auto vars = variable_part(m);
    const auto mag = m.coeff < 0 ? -m.coeff : m.coeff;
    if (m.coeff < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (vars.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += vars;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const PolynomialIndexSpec& spec) {
  return std::to_string(spec.rows) + "x" + std::to_string(spec.cols) + " i^floor((" +
         to_string(spec.f) + ")/" + std::to_string(spec.c) + ") j^floor((" + to_string(spec.g) +
         ")/" + std::to_string(spec.d) + ")";
}

QuatArray build_index_array(const PolynomialIndexSpec& spec) {
  if (spec.c < 1 || spec.d < 1) throw std::invalid_argument("denominators must be positive");
  if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("array dimensions must be positive");
  std::vector<UnitQuat> elems;
  elems.reserve(spec.rows * spec.cols);
  for (std::size_t a = 0; a < spec.rows; ++a) {
    for (std::size_t b = 0; b < spec.cols; ++b) {
      const auto ai = static_cast<std::int64_t>(a);
      const auto bi = static_cast<std::int64_t>(b);
      elems.push_back(unit_pow(Axis::i, floor_div(spec.f(ai, bi), spec.c)) *
                      unit_pow(Axis::j, floor_div(spec.g(ai, bi), spec.d)));
    }
  }
  return QuatArray({spec.rows, spec.cols}, std::move(elems));
}

AopResult aop_check(const QuatArray& array) {
  if (array.rank() != 2) throw std::invalid_argument("AOP is defined for 2-D arrays");
  const std::size_t rows = array.dims()[0];
  const std::size_t cols = array.dims()[1];
  auto at = [&](std::size_t a, std::size_t b) { return array[a * cols + b]; };

  AopResult result{true, true};
  for (std::size_t b1 = 0; b1 < cols && result.plain; ++b1) {
    for (std::size_t b2 = b1 + 1; b2 < cols; ++b2) {
      std::array<std::int64_t, 4> acc{};
      for (std::size_t a = 0; a < rows; ++a) add_term(acc, at(a, b1), at(a, b2));
      if (!is_zero(acc)) {
        result.plain = false;
        break;
      }
    }
  }
  for (std::size_t tau = 1; tau < cols; ++tau) {
    std::array<std::int64_t, 4> acc{};
    for (std::size_t b = 0; b < cols; ++b) {
      for (std::size_t a = 0; a < rows; ++a) add_term(acc, at(a, b), at(a, (b + tau) % cols));
    }
    if (!is_zero(acc)) {
      result.cyclic = false;
      break;
    }
  }
  return result;
}

std::string to_string(AopVariant v) {
  switch (v) {
    case AopVariant::plain: return "plain";
    case AopVariant::cyclic: return "cyclic";
    case AopVariant::either: return "either";
  }
  return "?";
}

AopVariant parse_aop_variant(const std::string& text) {
  if (text == "plain") return AopVariant::plain;
  if (text == "cyclic") return AopVariant::cyclic;
  if (text == "either") return AopVariant::either;
  throw std::invalid_argument("unknown AOP variant '" + text + "'");
}

bool is_aop_hit(const QuatArray& array, AopVariant variant) {
  const auto aop = aop_check(array);
  const bool ok = variant == AopVariant::plain    ? aop.plain
                  : variant == AopVariant::cyclic ? aop.cyclic
                                                  : (aop.plain || aop.cyclic);
  if (!ok) return false;
  const auto flat = flatten_row_major(array);
  return is_perfect(flat, Side::right) && is_perfect(flat, Side::left);
}

bool is_aop_hit(const PolynomialIndexSpec& spec, AopVariant variant) {
  return is_aop_hit(build_index_array(spec), variant);
}

std::vector<std::pair<std::size_t, std::size_t>> default_aop_sizes() {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  for (std::size_t r = 2; r <= 32; ++r) {
    for (std::size_t c = 2; c <= 32; ++c) {
      if (r * c > 16) sizes.emplace_back(r, c);
    }
  }
  return sizes;
}

PolynomialIndexSpec random_index_spec(std::size_t rows, std::size_t cols,
                                      const AopSearchOptions& opts, std::size_t size_index,
                                      std::size_t sample) {
  if (opts.coeff_bound < 1 || opts.max_denominator < 1 || opts.max_degree < 0) {
    throw std::invalid_argument("invalid AOP search bounds");
  }
  const auto key = splitmix64(splitmix64(splitmix64(opts.seed) ^ size_index) ^ sample);
  std::mt19937_64 rng(key);
  PolynomialIndexSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  spec.f = random_polynomial(rng, opts);
  spec.g = random_polynomial(rng, opts);
  spec.c = 1 + draw_below(rng, opts.max_denominator);
  spec.d = 1 + draw_below(rng, opts.max_denominator);
  return spec;
}

SearchReport aop_random_search(const std::vector<std::pair<std::size_t, std::size_t>>& sizes,
                               const AopSearchOptions& opts) {
  detail::Stopwatch clock;
  SearchReport report;
  report.kind = "aop";
  report.seed = opts.seed;
  report.parameters = {{"sizes", std::to_string(sizes.size())},
                       {"samples", std::to_string(opts.samples)},
                       {"coeff_bound", std::to_string(opts.coeff_bound)},
                       {"max_denominator", std::to_string(opts.max_denominator)},
                       {"max_degree", std::to_string(opts.max_degree)},
                       {"variant", to_string(opts.variant)}};

  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks_per_size = (opts.samples + kChunk - 1) / kChunk;
  auto run = [&](std::size_t range) {
    detail::RangeOutput out;
    const std::size_t size_index = range / chunks_per_size;
    const std::size_t first = (range % chunks_per_size) * kChunk;
    const std::size_t last = std::min(opts.samples, first + kChunk);
    const auto [rows, cols] = sizes[size_index];
    for (std::size_t sample = first; sample < last; ++sample) {
      ++out.candidates;
      auto spec = random_index_spec(rows, cols, opts, size_index, sample);
      const auto array = build_index_array(spec);
      if (is_aop_hit(array, opts.variant)) {
        out.hits.push_back({flatten_row_major(array), std::nullopt, std::move(spec)});
      }
    }
    return out;
  };

  detail::run_ranges(report, sizes.size() * chunks_per_size, 0, opts.jobs, {}, false, run);
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace quatseq
