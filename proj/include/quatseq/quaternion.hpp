#pragma once

// Exact arithmetic over the quaternion group Q8 = {±1, ±i, ±j, ±k} and over
// integer (Lipschitz) quaternions, plus a double-precision quaternion used for
// sequences whose entries are not simple units.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quatseq {

enum class Axis : std::uint8_t { one = 0, i = 1, j = 2, k = 3 };

/// One of the eight simple unit quaternions.
///
/// Stored as a 3-bit code: bits 0-1 hold the axis, bit 2 the sign. The code
/// order (1, i, j, k, -1, -i, -j, -k) is also the lexicographic order used
/// when picking canonical sequence representatives.
class UnitQuat {
 public:
  static constexpr std::size_t kCount = 8;

  constexpr UnitQuat() = default;
  constexpr explicit UnitQuat(Axis axis, bool negative = false)
      : code_(static_cast<std::uint8_t>(static_cast<std::uint8_t>(axis) |
                                        (negative ? 4u : 0u))) {}

  static constexpr UnitQuat from_code(std::uint8_t code) {
    UnitQuat q;
    q.code_ = static_cast<std::uint8_t>(code & 7u);
    return q;
  }

  constexpr std::uint8_t code() const { return code_; }
  constexpr Axis axis() const { return static_cast<Axis>(code_ & 3u); }
  constexpr bool negative() const { return (code_ & 4u) != 0; }

  constexpr UnitQuat operator-() const { return from_code(code_ ^ 4u); }

  friend constexpr bool operator==(UnitQuat, UnitQuat) = default;
  friend constexpr auto operator<=>(UnitQuat a, UnitQuat b) {
    return a.code_ <=> b.code_;
  }

 private:
  std::uint8_t code_ = 0;
};

namespace unit {
inline constexpr UnitQuat one{Axis::one};
inline constexpr UnitQuat i{Axis::i};
inline constexpr UnitQuat j{Axis::j};
inline constexpr UnitQuat k{Axis::k};
inline constexpr UnitQuat minus_one{Axis::one, true};
inline constexpr UnitQuat minus_i{Axis::i, true};
inline constexpr UnitQuat minus_j{Axis::j, true};
inline constexpr UnitQuat minus_k{Axis::k, true};
}  // namespace unit

namespace detail {

struct BasisProduct {
  Axis axis;
  bool negative;
};

// Products of basis elements, row x column.
inline constexpr BasisProduct kBasisTable[4][4] = {
    {{Axis::one, false}, {Axis::i, false}, {Axis::j, false}, {Axis::k, false}},
    {{Axis::i, false}, {Axis::one, true}, {Axis::k, false}, {Axis::j, true}},
    {{Axis::j, false}, {Axis::k, true}, {Axis::one, true}, {Axis::i, false}},
    {{Axis::k, false}, {Axis::j, false}, {Axis::i, true}, {Axis::one, true}},
};

constexpr std::array<std::uint8_t, 64> build_unit_mul_table() {
  std::array<std::uint8_t, 64> table{};
  for (std::uint8_t p = 0; p < 8; ++p) {
    for (std::uint8_t q = 0; q < 8; ++q) {
      const auto prod = kBasisTable[p & 3u][q & 3u];
      const bool neg = ((p >> 2) ^ (q >> 2) ^ (prod.negative ? 1u : 0u)) & 1u;
      table[p * 8u + q] =
          static_cast<std::uint8_t>(static_cast<std::uint8_t>(prod.axis) | (neg ? 4u : 0u));
    }
  }
  return table;
}

inline constexpr std::array<std::uint8_t, 64> kUnitMulTable = build_unit_mul_table();

constexpr std::uint8_t conj_code(std::uint8_t code) {
  return (code & 3u) == 0 ? code : static_cast<std::uint8_t>(code ^ 4u);
}

}  // namespace detail

constexpr UnitQuat unit_mul(UnitQuat p, UnitQuat q) {
  return UnitQuat::from_code(detail::kUnitMulTable[p.code() * 8u + q.code()]);
}

constexpr UnitQuat operator*(UnitQuat p, UnitQuat q) { return unit_mul(p, q); }

constexpr UnitQuat unit_conj(UnitQuat q) {
  return UnitQuat::from_code(detail::conj_code(q.code()));
}

/// axis^e with e reduced mod 4 into 0..3 first, so negative exponents are fine.
constexpr UnitQuat unit_pow(Axis axis, std::int64_t e) {
  const auto r = ((e % 4) + 4) % 4;
  UnitQuat base{axis};
  UnitQuat acc = unit::one;
  for (std::int64_t n = 0; n < r; ++n) acc = acc * base;
  return acc;
}

/// Quaternion with 64-bit integer components w + x i + y j + z k.
///
/// Multiplication and addition are checked and throw std::overflow_error;
/// correlation sums over arrays of up to 2^24 units cannot overflow.
struct LipschitzQuat {
  std::int64_t w = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  constexpr bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  static constexpr LipschitzQuat scalar(std::int64_t v) { return {v, 0, 0, 0}; }

  friend constexpr bool operator==(const LipschitzQuat&, const LipschitzQuat&) = default;
};

LipschitzQuat quat_add(const LipschitzQuat& p, const LipschitzQuat& q);
LipschitzQuat quat_sub(const LipschitzQuat& p, const LipschitzQuat& q);
LipschitzQuat quat_mul(const LipschitzQuat& p, const LipschitzQuat& q);

constexpr LipschitzQuat quat_conj(const LipschitzQuat& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr LipschitzQuat quat_neg(const LipschitzQuat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
std::int64_t norm2(const LipschitzQuat& q);

inline LipschitzQuat operator+(const LipschitzQuat& p, const LipschitzQuat& q) { return quat_add(p, q); }
inline LipschitzQuat operator-(const LipschitzQuat& p, const LipschitzQuat& q) { return quat_sub(p, q); }
inline LipschitzQuat operator*(const LipschitzQuat& p, const LipschitzQuat& q) { return quat_mul(p, q); }
inline LipschitzQuat& operator+=(LipschitzQuat& p, const LipschitzQuat& q) { return p = quat_add(p, q); }

constexpr LipschitzQuat embed(UnitQuat u) {
  const std::int64_t s = u.negative() ? -1 : 1;
  switch (u.axis()) {
    case Axis::one: return {s, 0, 0, 0};
    case Axis::i: return {0, s, 0, 0};
    case Axis::j: return {0, 0, s, 0};
    case Axis::k: return {0, 0, 0, s};
  }
  return {};
}

/// Σ_{n=0}^{4m-1} axis^(c·n). Zero unless c ≡ 0 (mod 4), in which case 4m.
LipschitzQuat axis_power_sum(Axis axis, std::int64_t c, std::int64_t m);

/// Double-precision quaternion for entries outside the unit alphabet.
struct FloatQuat {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const FloatQuat&, const FloatQuat&) = default;
};

inline constexpr double kFloatTolerance = 1e-9;

FloatQuat operator+(const FloatQuat& p, const FloatQuat& q);
FloatQuat operator*(const FloatQuat& p, const FloatQuat& q);
FloatQuat float_conj(const FloatQuat& q);
double norm2(const FloatQuat& q);
FloatQuat to_float(const LipschitzQuat& q);
FloatQuat to_float(UnitQuat u);

/// Per-component absolute comparison.
bool approx_equal(const FloatQuat& a, const FloatQuat& b, double tol = kFloatTolerance);
bool approx_zero(const FloatQuat& q, double tol = kFloatTolerance);

// Text forms. Units use the tokens 1, -1, i, -i, j, -j, k, -k. General
// quaternions render as e.g. "1-i+j+3k": zero components are omitted, unit
// coefficients on i/j/k are dropped, and the zero quaternion is "0".
std::string to_string(UnitQuat u);
std::string to_string(const LipschitzQuat& q);
/// Components printed with 17 significant digits.
std::string to_string(const FloatQuat& q);

std::optional<UnitQuat> parse_unit(std::string_view token);
/// Accepts the to_string forms above (whitespace-free); nullopt on malformed text.
std::optional<FloatQuat> parse_float_quat(std::string_view text);
/// As parse_float_quat, additionally requiring integral components.
std::optional<LipschitzQuat> parse_lipschitz(std::string_view text);

}  // namespace quatseq
