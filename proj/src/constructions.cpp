#include "quatseq/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace quatseq {

namespace {

void require_range(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + ": n must be in " + std::to_string(lo) +
                                ".." + std::to_string(hi) + ", got " + std::to_string(n));
  }
}

// Arguments are nonnegative here, so integer division is the floor.
UnitQuat power_term(Axis axis, std::uint64_t numerator, std::uint64_t denominator) {
  return unit_pow(axis, static_cast<std::int64_t>((numerator / denominator) % 4));
}

QuatArray index_function_4d(int n, std::size_t da, std::size_t db, std::size_t dc,
                            std::size_t dd) {
  const std::uint64_t denom = std::uint64_t{1} << (n - 1);
  std::vector<UnitQuat> elems;
  elems.reserve(da * db * dc * dd);
  for (std::uint64_t a = 0; a < da; ++a) {
    for (std::uint64_t b = 0; b < db; ++b) {
      const UnitQuat ab = power_term(Axis::i, a * b, denom);
      for (std::uint64_t c = 0; c < dc; ++c) {
        const UnitQuat abc = ab * power_term(Axis::j, b * c, denom);
        for (std::uint64_t d = 0; d < dd; ++d) {
          elems.push_back(abc * power_term(Axis::k, c * d, denom));
        }
      }
    }
  }
  return QuatArray({da, db, dc, dd}, std::move(elems));
}

}  // namespace

QuatSequence construct_seq_2n(int n) {
  require_range("construct_seq_2n", n, 1, 24);
  const std::uint64_t len = std::uint64_t{1} << n;
  const std::uint64_t denom = std::uint64_t{1} << (n - 1);
  std::vector<UnitQuat> elems;
  elems.reserve(len);
  for (std::uint64_t a = 0; a < len; ++a) {
    elems.push_back(power_term(Axis::i, a * a, denom) * power_term(Axis::j, 2 * a * a, denom));
  }
  return QuatSequence(std::move(elems));
}

QuatArray construct_aop_array() {
  std::vector<UnitQuat> elems;
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      elems.push_back(power_term(Axis::i, a * b, 1) * power_term(Axis::j, a * b, 2));
    }
  }
  return QuatArray({8, 8}, std::move(elems));
}

QuatArray construct_2d(int n) {
  require_range("construct_2d", n, 2, 12);
  const std::uint64_t side = std::uint64_t{1} << n;
  std::vector<UnitQuat> elems;
  elems.reserve(side * side);
  for (std::uint64_t a = 0; a < side; ++a) {
    for (std::uint64_t b = 0; b < side; ++b) {
      elems.push_back(power_term(Axis::i, 4 * a * b, side) *
                      power_term(Axis::j, 4 * a * a * b * b, side));
    }
  }
  return QuatArray({side, side}, std::move(elems));
}

QuatArray construct_4d_iii(int n) {
  require_range("construct_4d_iii", n, 1, 5);
  const std::size_t d = std::size_t{1} << (n + 1);
  return index_function_4d(n, d, d, d, d);
}

QuatArray construct_4d_iv(int n) {
  require_range("construct_4d_iv", n, 1, 5);
  const std::size_t small = std::size_t{1} << n;
  const std::size_t large = std::size_t{1} << (n + 1);
  return index_function_4d(n, small, small, large, large);
}

QuatSequence template_sequence(const TemplateSpec& spec) {
  const auto m = spec.alpha.size();
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("template sign vector must have even length >= 2, got " +
                                std::to_string(m));
  }
  std::vector<UnitQuat> sub;
  sub.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    const int sign = spec.alpha[t];
    if (sign != 1 && sign != -1) throw std::invalid_argument("template signs must be +1 or -1");
    const UnitQuat base = t % 2 == 0 ? unit::j : unit::i;
    sub.push_back(sign < 0 ? -base : base);
  }
  std::vector<UnitQuat> elems;
  elems.reserve(2 * m + 2);
  elems.push_back(unit::minus_i);
  elems.insert(elems.end(), sub.begin(), sub.end());
  elems.push_back(unit::k);
  elems.insert(elems.end(), sub.rbegin(), sub.rend());
  return QuatSequence(std::move(elems));
}

std::optional<TemplateSpec> extract_template(const QuatSequence& seq) {
  if (seq.size() < 6 || seq.size() % 4 != 2) return std::nullopt;
  const std::size_t m = (seq.size() - 2) / 2;
  TemplateSpec spec;
  for (std::size_t t = 0; t < m; ++t) {
    const UnitQuat u = seq[t + 1];
    const Axis want = t % 2 == 0 ? Axis::j : Axis::i;
    if (u.axis() != want) return std::nullopt;
    spec.alpha.push_back(u.negative() ? -1 : 1);
  }
  if (template_sequence(spec) != seq) return std::nullopt;
  return spec;
}

QuatSequence coprime_product(const QuatSequence& s1, const QuatSequence& s2, ProductOrder order) {
  if (s1.empty() || s2.empty()) throw std::invalid_argument("coprime_product of an empty sequence");
  if (std::gcd(s1.size(), s2.size()) != 1) {
    throw std::invalid_argument("coprime_product needs coprime lengths, got " +
                                std::to_string(s1.size()) + " and " + std::to_string(s2.size()));
  }
  const std::size_t len = s1.size() * s2.size();
  std::vector<UnitQuat> elems(len);
  for (std::size_t t = 0; t < len; ++t) {
    const UnitQuat a = s1[t % s1.size()];
    const UnitQuat b = s2[t % s2.size()];
    elems[t] = order == ProductOrder::first_left ? a * b : b * a;
  }
  return QuatSequence(std::move(elems));
}

QuatArray construct_by_name(const std::string& name, int n) {
  if (name == "seq2n") return QuatArray::from_sequence(construct_seq_2n(n));
  if (name == "aop8x8") return construct_aop_array();
  if (name == "arr2d") return construct_2d(n);
  if (name == "arr4d-iii") return construct_4d_iii(n);
  if (name == "arr4d-iv") return construct_4d_iv(n);
  throw std::invalid_argument("unknown parameterised construction '" + name + "'");
}

}  // namespace quatseq
