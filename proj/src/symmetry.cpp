#include "quatseq/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quatseq/correlation.hpp"

namespace quatseq {

namespace {

constexpr ValueMap kIdentity = {0, 1, 2, 3, 4, 5, 6, 7};

ValueMap compose(const ValueMap& outer, const ValueMap& inner) {
  ValueMap out{};
  for (std::uint8_t c = 0; c < 8; ++c) out[c] = outer[inner[c]];
  return out;
}

ValueMap negation_map() {
  ValueMap m{};
  for (std::uint8_t c = 0; c < 8; ++c) m[c] = static_cast<std::uint8_t>(c ^ 4u);
  return m;
}

ValueMap conjugation_map() {
  ValueMap m{};
  for (std::uint8_t c = 0; c < 8; ++c) m[c] = detail::conj_code(c);
  return m;
}

std::vector<ValueMap> value_generators(SymmetrySet set) {
  std::vector<ValueMap> gens;
  if (set.contains(Symmetry::negation)) gens.push_back(negation_map());
  if (set.contains(Symmetry::conjugation)) gens.push_back(conjugation_map());
  if (set.contains(Symmetry::automorphism)) {
    const auto& autos = q8_automorphisms();
    gens.insert(gens.end(), autos.begin() + 1, autos.end());
  }
  return gens;
}

std::vector<ValueMap> value_group(SymmetrySet set) {
  const auto gens = value_generators(set);
  std::vector<ValueMap> group{kIdentity};
  std::set<ValueMap> seen{kIdentity};
  for (std::size_t n = 0; n < group.size(); ++n) {
    for (const auto& g : gens) {
      const auto next = compose(g, group[n]);
      if (seen.insert(next).second) group.push_back(next);
    }
  }
  return group;
}

struct IndexMap {
  std::size_t scale;
  std::size_t offset;

  friend auto operator<=>(const IndexMap&, const IndexMap&) = default;
};

// Affine position maps i -> scale·i + offset (mod L), closed under composition.
std::vector<IndexMap> index_group(std::size_t len, SymmetrySet set) {
  std::vector<IndexMap> gens;
  if (set.contains(Symmetry::rotation)) gens.push_back({1, 1 % len});
  if (set.contains(Symmetry::reversal)) gens.push_back({len - 1, len - 1});
  if (set.contains(Symmetry::decimation)) {
    for (std::size_t c = 2; c < len; ++c) {
      if (std::gcd(c, len) == 1) gens.push_back({c, 0});
    }
  }
  std::vector<IndexMap> group{{1 % len, 0}};
  std::set<IndexMap> seen{group.front()};
  for (std::size_t n = 0; n < group.size(); ++n) {
    for (const auto& g : gens) {
      const IndexMap next{(g.scale * group[n].scale) % len,
                          (g.scale * group[n].offset + g.offset) % len};
      if (seen.insert(next).second) group.push_back(next);
    }
  }
  return group;
}

QuatSequence transformed(const QuatSequence& seq, const ValueMap& v, const IndexMap& m) {
  const std::size_t len = seq.size();
  std::vector<UnitQuat> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = UnitQuat::from_code(v[seq[(m.scale * i + m.offset) % len].code()]);
  }
  return QuatSequence(std::move(out));
}

// Images of seq under the individual generators of one symmetry.
std::vector<QuatSequence> generator_images(const QuatSequence& seq, Symmetry sym) {
  const std::size_t len = seq.size();
  std::vector<QuatSequence> out;
  switch (sym) {
    case Symmetry::negation:
      out.push_back(quatseq::apply(negation_map(), seq));
      break;
    case Symmetry::conjugation:
      out.push_back(quatseq::apply(conjugation_map(), seq));
      break;
    case Symmetry::automorphism:
      for (const auto& a : q8_automorphisms()) out.push_back(quatseq::apply(a, seq));
      break;
    case Symmetry::rotation:
      out.push_back(transformed(seq, kIdentity, {1, 1}));
      break;
    case Symmetry::reversal:
      out.push_back(transformed(seq, kIdentity, {len - 1, len - 1}));
      break;
    case Symmetry::decimation:
      for (std::size_t c = 2; c < len; ++c) {
        if (std::gcd(c, len) == 1) out.push_back(transformed(seq, kIdentity, {c, 0}));
      }
      break;
  }
  return out;
}

}  // namespace

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::negation: return "negation";
    case Symmetry::rotation: return "rotation";
    case Symmetry::reversal: return "reversal";
    case Symmetry::automorphism: return "automorphism";
    case Symmetry::conjugation: return "conjugation";
    case Symmetry::decimation: return "decimation";
  }
  return "?";
}

std::string to_string(SymmetrySet set) {
  std::string out;
  for (auto s : kAllSymmetries) {
    if (!set.contains(s)) continue;
    if (!out.empty()) out += ',';
    out += to_string(s);
  }
  return out.empty() ? "none" : out;
}

SymmetrySet parse_symmetry_set(const std::string& text) {
  SymmetrySet set;
  if (text == "none" || text.empty()) return set;
  if (text == "all") return SymmetrySet::all();
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    bool found = false;
    for (auto s : kAllSymmetries) {
      if (to_string(s) == name) {
        set.insert(s);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown symmetry '" + name + "'");
  }
  return set;
}

SymmetrySet default_symmetries() { return SymmetrySet::all(); }

const std::vector<ValueMap>& q8_automorphisms() {
  static const std::vector<ValueMap> autos = [] {
    std::vector<ValueMap> out{kIdentity};
    // Images of i and j determine the map; k = φ(i)φ(j).
    const std::uint8_t pure[6] = {1, 2, 3, 5, 6, 7};
    for (auto ii : pure) {
      for (auto jj : pure) {
        if ((ii & 3u) == (jj & 3u)) continue;
        ValueMap m{};
        m[0] = 0;
        m[4] = 4;
        m[1] = ii;
        m[2] = jj;
        m[3] = unit_mul(UnitQuat::from_code(ii), UnitQuat::from_code(jj)).code();
        for (std::uint8_t c = 1; c < 4; ++c) m[c + 4] = static_cast<std::uint8_t>(m[c] ^ 4u);
        bool homomorphism = true;
        for (std::uint8_t p = 0; p < 8 && homomorphism; ++p) {
          for (std::uint8_t q = 0; q < 8; ++q) {
            const auto lhs = m[unit_mul(UnitQuat::from_code(p), UnitQuat::from_code(q)).code()];
            const auto rhs = unit_mul(UnitQuat::from_code(m[p]), UnitQuat::from_code(m[q])).code();
            if (lhs != rhs) {
              homomorphism = false;
              break;
            }
          }
        }
        if (homomorphism && m != kIdentity) out.push_back(m);
      }
    }
    return out;
  }();
  return autos;
}

QuatSequence apply(const ValueMap& map, const QuatSequence& seq) {
  std::vector<UnitQuat> out;
  out.reserve(seq.size());
  for (auto u : seq) out.push_back(UnitQuat::from_code(map[u.code()]));
  return QuatSequence(std::move(out));
}

std::vector<QuatSequence> orbit(const QuatSequence& seq, SymmetrySet set) {
  if (seq.empty()) return {seq};
  std::vector<QuatSequence> out;
  for (const auto& v : value_group(set)) {
    for (const auto& m : index_group(seq.size(), set)) out.push_back(transformed(seq, v, m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuatSequence canonical_form(const QuatSequence& seq, SymmetrySet set) {
  if (set.empty() || seq.empty()) return seq;
  QuatSequence best = seq;
  for (const auto& v : value_group(set)) {
    for (const auto& m : index_group(seq.size(), set)) {
      auto candidate = transformed(seq, v, m);
      if (candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

std::vector<QuatSequence> brute_force_perfect(std::size_t length) {
  static constexpr UnitQuat kAlphabet[6] = {unit::i,       unit::j,       unit::k,
                                            unit::minus_i, unit::minus_j, unit::minus_k};
  if (length == 0 || length > 8) throw std::invalid_argument("brute force supports lengths 1..8");
  std::size_t total = 1;
  for (std::size_t n = 0; n < length; ++n) total *= 6;
  std::vector<QuatSequence> hits;
  std::vector<UnitQuat> elems(length);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t n = length; n-- > 0;) {
      elems[n] = kAlphabet[rest % 6];
      rest /= 6;
    }
    QuatSequence s(elems);
    if (is_perfect(s, Side::right)) hits.push_back(std::move(s));
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

bool gate_symmetry(Symmetry sym, std::size_t max_length) {
  for (std::size_t len = 2; len <= max_length; len += 2) {
    const auto hits = brute_force_perfect(len);
    const std::set<QuatSequence> hit_set(hits.begin(), hits.end());
    for (const auto& h : hits) {
      for (const auto& image : generator_images(h, sym)) {
        if (!hit_set.contains(image)) return false;
      }
    }
  }
  return true;
}

}  // namespace quatseq
