#include "quatseq/quaternion.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace quatseq {

namespace {

struct Components {
  std::int64_t w, x, y, z;
};

constexpr Components component_product(const Components& a, const Components& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          b.w * a.x + a.w * b.x - b.y * a.z + a.y * b.z,
          b.w * a.y + a.w * b.y + b.x * a.z - a.x * b.z,
          b.w * a.z + a.w * b.z - b.x * a.y + a.x * b.y};
}

constexpr Components components(UnitQuat u) {
  const auto e = embed(u);
  return {e.w, e.x, e.y, e.z};
}

// The 64-entry group table must agree with the component product formula.
constexpr bool unit_table_matches_components() {
  for (std::uint8_t p = 0; p < 8; ++p) {
    for (std::uint8_t q = 0; q < 8; ++q) {
      const auto expect = component_product(components(UnitQuat::from_code(p)),
                                            components(UnitQuat::from_code(q)));
      const auto got = components(unit_mul(UnitQuat::from_code(p), UnitQuat::from_code(q)));
      if (expect.w != got.w || expect.x != got.x || expect.y != got.y || expect.z != got.z) {
        return false;
      }
    }
  }
  return true;
}

static_assert(unit_table_matches_components());
static_assert(unit::i * unit::j == unit::k);
static_assert(unit::j * unit::i == unit::minus_k);

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("quaternion component overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("quaternion component overflow");
  return r;
}

std::int64_t dot4(std::int64_t a0, std::int64_t b0, std::int64_t a1, std::int64_t b1,
                  std::int64_t a2, std::int64_t b2, std::int64_t a3, std::int64_t b3) {
  std::int64_t r = checked_mul(a0, b0);
  r = checked_add(r, checked_mul(a1, b1));
  r = checked_add(r, checked_mul(a2, b2));
  return checked_add(r, checked_mul(a3, b3));
}

template <typename Number, typename Formatter>
std::string render(const Number (&c)[4], Formatter fmt) {
  static constexpr const char* kSuffix[4] = {"", "i", "j", "k"};
  std::string out;
  for (int n = 0; n < 4; ++n) {
    if (c[n] == 0) continue;
    const bool neg = c[n] < 0;
    const Number mag = neg ? -c[n] : c[n];
    if (neg) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (n == 0 || mag != 1) out += fmt(mag);
    out += kSuffix[n];
  }
  return out.empty() ? "0" : out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

LipschitzQuat quat_add(const LipschitzQuat& p, const LipschitzQuat& q) {
  return {checked_add(p.w, q.w), checked_add(p.x, q.x), checked_add(p.y, q.y),
          checked_add(p.z, q.z)};
}

LipschitzQuat quat_sub(const LipschitzQuat& p, const LipschitzQuat& q) {
  return quat_add(p, quat_neg(q));
}

LipschitzQuat quat_mul(const LipschitzQuat& p, const LipschitzQuat& q) {
  return {dot4(p.w, q.w, -p.x, q.x, -p.y, q.y, -p.z, q.z),
          dot4(q.w, p.x, p.w, q.x, -q.y, p.z, p.y, q.z),
          dot4(q.w, p.y, p.w, q.y, q.x, p.z, -p.x, q.z),
          dot4(q.w, p.z, p.w, q.z, -q.x, p.y, p.x, q.y)};
}

std::int64_t norm2(const LipschitzQuat& q) { return dot4(q.w, q.w, q.x, q.x, q.y, q.y, q.z, q.z); }

LipschitzQuat axis_power_sum(Axis axis, std::int64_t c, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("axis_power_sum: m must be positive");
  // Only the exponent mod 4 matters, so reduce c before multiplying by n.
  const std::int64_t c4 = ((c % 4) + 4) % 4;
  LipschitzQuat sum;
  for (std::int64_t n = 0; n < 4 * m; ++n) sum += embed(unit_pow(axis, c4 * (n % 4)));
  return sum;
}

FloatQuat operator+(const FloatQuat& p, const FloatQuat& q) {
  return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

FloatQuat operator*(const FloatQuat& p, const FloatQuat& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          q.w * p.x + p.w * q.x - q.y * p.z + p.y * q.z,
          q.w * p.y + p.w * q.y + q.x * p.z - p.x * q.z,
          q.w * p.z + p.w * q.z - q.x * p.y + p.x * q.y};
}

FloatQuat float_conj(const FloatQuat& q) { return {q.w, -q.x, -q.y, -q.z}; }

double norm2(const FloatQuat& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

FloatQuat to_float(const LipschitzQuat& q) {
  return {static_cast<double>(q.w), static_cast<double>(q.x), static_cast<double>(q.y),
          static_cast<double>(q.z)};
}

FloatQuat to_float(UnitQuat u) { return to_float(embed(u)); }

bool approx_equal(const FloatQuat& a, const FloatQuat& b, double tol) {
  return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
         std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

bool approx_zero(const FloatQuat& q, double tol) { return approx_equal(q, FloatQuat{}, tol); }

std::string to_string(UnitQuat u) {
  static constexpr const char* kTokens[8] = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return kTokens[u.code()];
}

std::string to_string(const LipschitzQuat& q) {
  const std::int64_t c[4] = {q.w, q.x, q.y, q.z};
  return render(c, [](std::int64_t v) { return std::to_string(v); });
}

std::string to_string(const FloatQuat& q) {
  const double c[4] = {q.w, q.x, q.y, q.z};
  return render(c, format_double);
}

std::optional<UnitQuat> parse_unit(std::string_view token) {
  bool negative = false;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  if (token == "1") return UnitQuat{Axis::one, negative};
  if (token == "i") return UnitQuat{Axis::i, negative};
  if (token == "j") return UnitQuat{Axis::j, negative};
  if (token == "k") return UnitQuat{Axis::k, negative};
  return std::nullopt;
}

std::optional<FloatQuat> parse_float_quat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text == "0") return FloatQuat{};
  double c[4] = {0, 0, 0, 0};
  bool seen[4] = {false, false, false, false};
  std::size_t pos = 0;
  while (pos < text.size()) {
    double sign = 1.0;
    const bool first = pos == 0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!first) {
      return std::nullopt;
    }
    // Coefficient: digits, '.', and an optional exponent.
    std::size_t start = pos;
    while (pos < text.size()) {
      const char ch = text[pos];
      const bool exp_sign = (ch == '+' || ch == '-') && pos > start &&
                            (text[pos - 1] == 'e' || text[pos - 1] == 'E');
      if ((ch >= '0' && ch <= '9') || ch == '.' || ch == 'e' || ch == 'E' || exp_sign) {
        ++pos;
      } else {
        break;
      }
    }
    double mag = 1.0;
    if (pos > start) {
      const std::string num(text.substr(start, pos - start));
      char* end = nullptr;
      mag = std::strtod(num.c_str(), &end);
      if (end != num.c_str() + num.size()) return std::nullopt;
    }
    int slot = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      slot = text[pos] - 'i' + 1;
      ++pos;
    } else if (pos == start) {
      return std::nullopt;  // a bare sign
    }
    if (seen[slot]) return std::nullopt;
    seen[slot] = true;
    c[slot] = sign * mag;
  }
  return FloatQuat{c[0], c[1], c[2], c[3]};
}

std::optional<LipschitzQuat> parse_lipschitz(std::string_view text) {
  const auto f = parse_float_quat(text);
  if (!f) return std::nullopt;
  const double c[4] = {f->w, f->x, f->y, f->z};
  std::int64_t out[4];
  for (int n = 0; n < 4; ++n) {
    if (std::nearbyint(c[n]) != c[n] || std::abs(c[n]) > 9.0e15) return std::nullopt;
    out[n] = static_cast<std::int64_t>(c[n]);
  }
  return LipschitzQuat{out[0], out[1], out[2], out[3]};
}

}  // namespace quatseq
