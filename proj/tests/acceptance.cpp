// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "quatseq/aop_search.hpp"
#include "quatseq/catalog.hpp"
#include "quatseq/constructions.hpp"
#include "quatseq/correlation.hpp"
#include "quatseq/search.hpp"
#include "quatseq/symmetry.hpp"
#include "quatseq/text_format.hpp"

using namespace quatseq;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

const std::vector<CatalogEntry>& catalog() {
  static const auto all = load_catalog(QUATSEQ_TEST_CATALOG_DIR);
  return all;
}

const CatalogEntry& entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range(id);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::vector<std::int64_t> random_shift(std::mt19937_64& rng, const std::vector<std::size_t>& dims) {
  std::vector<std::int64_t> s(dims.size());
  for (std::size_t a = 0; a < dims.size(); ++a) s[a] = static_cast<std::int64_t>(rng() % dims[a]);
  return s;
}

bool is_zero_shift(const std::vector<std::int64_t>& s) {
  for (auto v : s) {
    if (v != 0) return false;
  }
  return true;
}

// 10,000 uniformly drawn nonzero shifts, both sides.
void sampled_shifts(Check& c, const QuatArray& arr, std::uint64_t seed, const std::string& label) {
  std::mt19937_64 rng(seed);
  int drawn = 0;
  while (drawn < 10000) {
    const auto s = random_shift(rng, arr.dims());
    if (is_zero_shift(s)) continue;
    ++drawn;
    c.expect(array_autocorr(arr, s, Side::right).is_zero(), label + " right shift nonzero");
    c.expect(array_autocorr(arr, s, Side::left).is_zero(), label + " left shift nonzero");
  }
}

// Criterion 1
void example_table(Check& c) {
  const auto s = parse_sequence("i,-j,-1,-1,k,1");
  const LipschitzQuat left[] = {{6, 0, 0, 0}, {1, -1, 1, 1}, {-1, -1, 3, 1},
                                {-2, 0, 0, 0}, {-1, 1, -3, -1}, {1, 1, -1, -1}};
  const LipschitzQuat right[] = {{6, 0, 0, 0}, {1, -1, 1, 3}, {-1, -1, 1, 1},
                                 {-2, 0, 0, 0}, {-1, 1, -1, -1}, {1, 1, -1, -3}};
  const auto ls = full_spectrum(s, Side::left);
  const auto rs = full_spectrum(s, Side::right);
  for (int tau = 0; tau < 6; ++tau) {
    c.expect(ls.values[tau] == left[tau], "left row " + std::to_string(tau));
    c.expect(rs.values[tau] == right[tau], "right row " + std::to_string(tau));
  }
}

// Criterion 2
void catalog_sequences(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  std::size_t shortest = SIZE_MAX;
  std::size_t longest = 0;
  for (const auto& e : catalog()) {
    if (!starts_with(e.id, "exhaustive-") && !starts_with(e.id, "template-")) continue;
    const auto& s = std::get<QuatSequence>(e.payload);
    ++count;
    shortest = std::min(shortest, s.size());
    longest = std::max(longest, s.size());
    c.expect(is_perfect(s, Side::right) && is_perfect(s, Side::left), e.id + " not perfect");
  }
  c.expect(count == 19, "expected 19 sequences, found " + std::to_string(count));
  c.expect(shortest == 4 && longest == 98, "length range");
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "took " + fmt(t));
}

// Criterion 3
void construction_one(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 6; ++n) {
    const auto s = construct_seq_2n(n);
    c.expect(is_perfect(s, Side::right) && is_perfect(s, Side::left), "n=" + std::to_string(n) + " not perfect");
    char id[32];
    std::snprintf(id, sizeof id, "seq2n-L%03zu", s.size());
    c.expect(std::get<QuatSequence>(entry(id).payload) == s, std::string(id) + " listing mismatch");
  }
  for (int n = 7; n <= 10; ++n) {
    const auto s = construct_seq_2n(n);
    for (auto side : {Side::right, Side::left}) {
      const auto spec = full_spectrum(s, side);
      bool odd_zero = true;
      for (std::size_t tau = 1; tau < s.size(); tau += 2) odd_zero = odd_zero && spec.values[tau].is_zero();
      c.expect(odd_zero, "n=" + std::to_string(n) + " odd shift nonzero");
    }
  }
  // Reference n = 7 values: nonzero entries only, every other value is 0.
  const std::map<std::size_t, std::int64_t> reference = {{0, 128},  {8, 16},   {24, 16},  {40, -16}, {56, -16},
                                                       {72, -16}, {88, -16}, {104, 16}, {120, 16}};
  const auto spec = full_spectrum(construct_seq_2n(7), Side::right);
  c.expect(spec.values.size() == 128, "n=7 spectrum size");
  for (std::size_t tau = 0; tau < spec.values.size(); ++tau) {
    const auto it = reference.find(tau);
    const auto want = LipschitzQuat::scalar(it == reference.end() ? 0 : it->second);
    c.expect(spec.values[tau] == want, "n=7 value at " + std::to_string(tau));
  }
  c.expect(spec.zcz == std::optional<std::size_t>(7), "zcz != 7");
  const double t = seconds_since(t0);
  c.expect(t < 5.0, "took " + fmt(t));
}

// Criterion 4
std::string aop_artifact(Check& c) {
  const auto arr = construct_aop_array();
  c.expect(arr == std::get<QuatArray>(entry("aop-8x8").payload), "8x8 array mismatch");
  const auto flat = flatten_row_major(arr);
  c.expect(flat == std::get<QuatSequence>(entry("aop-L064").payload), "flattening mismatch");
  c.expect(is_perfect(flat, Side::right) && is_perfect(flat, Side::left), "flattening not perfect");
  const auto r = aop_check(arr);
  return std::string("plain=") + (r.plain ? "yes" : "no") + " cyclic=" + (r.cyclic ? "yes" : "no");
}

// Criterion 5
std::string construction_two(Check& c) {
  SpectrumOptions naive;
  naive.naive_budget = SIZE_MAX;
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    const auto arr = construct_2d(n);
    for (auto side : {Side::right, Side::left}) {
      c.expect(full_spectrum(arr, side, naive).perfect, "naive n=" + std::to_string(n));
    }
  }
  const double naive_t = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    const auto arr = construct_2d(n);
    for (auto side : {Side::right, Side::left}) {
      c.expect(fft_autocorr_all(arr, side).perfect, "fft n=" + std::to_string(n));
    }
  }
  const double fft_t = seconds_since(t0);
  c.expect(construct_2d(4) == std::get<QuatArray>(entry("arr2d-16x16").payload), "n=4 array mismatch");
  c.expect(naive_t < 30.0, "naive took " + fmt(naive_t));
  c.expect(fft_t < 2.0, "fft took " + fmt(fft_t));
  return "naive " + fmt(naive_t) + ", fft " + fmt(fft_t);
}

// Criterion 6
std::string construction_three(Check& c) {
  c.expect(construct_4d_iii(1) == std::get<QuatArray>(entry("arr4d-iii-4x4x4x4").payload), "n=1 array mismatch");
  for (int n = 1; n <= 2; ++n) {
    const auto arr = construct_4d_iii(n);
    for (auto side : {Side::right, Side::left}) {
      c.expect(full_spectrum(arr, side).perfect, "n=" + std::to_string(n) + " not perfect");
    }
  }
  const auto arr = construct_4d_iii(3);
  // Every residue class of (s0 mod 4, s3 mod 4) other than (0, 0), with
  // random values on the remaining coordinates.
  std::mt19937_64 rng(3);
  const auto side_len = static_cast<std::int64_t>(arr.dims()[0]);
  for (std::int64_t r0 = 0; r0 < 4; ++r0) {
    for (std::int64_t r3 = 0; r3 < 4; ++r3) {
      if (r0 == 0 && r3 == 0) continue;
      for (int sample = 0; sample < 40; ++sample) {
        auto s = random_shift(rng, arr.dims());
        s[0] = (s[0] - s[0] % 4 + r0) % side_len;
        s[3] = (s[3] - s[3] % 4 + r3) % side_len;
        c.expect(array_autocorr(arr, s, Side::right).is_zero(), "class shift nonzero");
        c.expect(array_autocorr(arr, s, Side::left).is_zero(), "class shift nonzero (left)");
      }
    }
  }
  sampled_shifts(c, arr, 33, "n=3");
  const auto t0 = std::chrono::steady_clock::now();
  for (auto side : {Side::right, Side::left}) c.expect(fft_autocorr_all(arr, side).perfect, "n=3 fft not perfect");
  const double t = seconds_since(t0);
  c.expect(t < 60.0, "fft took " + fmt(t));
  return "n=3 fft " + fmt(t);
}

// Criterion 7
void construction_four(Check& c) {
  for (int n = 1; n <= 2; ++n) {
    const auto arr = construct_4d_iv(n);
    for (auto side : {Side::right, Side::left}) {
      c.expect(full_spectrum(arr, side).perfect, "n=" + std::to_string(n) + " not perfect");
    }
  }
  sampled_shifts(c, construct_4d_iv(3), 44, "n=3");
}

bool orbit_contains(const SearchReport& r, const std::string& text) {
  const auto want = parse_sequence(text);
  for (const auto& h : r.hits) {
    const auto o = orbit(h.sequence, default_symmetries());
    if (std::binary_search(o.begin(), o.end(), want)) return true;
  }
  return false;
}

// Criterion 8
std::string search_reproduction(Check& c, std::vector<SearchReport>& reports) {
  for (auto s : kAllSymmetries) {
    if (default_symmetries().contains(s)) c.expect(gate_symmetry(s), "gate failed for " + to_string(s));
  }
  const auto l4 = exhaustive_search(4);
  const auto l6 = exhaustive_search(6);
  c.expect(orbit_contains(l4, "-k,i,-k,-i"), "L=4 example not reached");
  c.expect(orbit_contains(l6, "j,k,-j,k,j,-i"), "L=6 example not reached");
  const auto t14 = template_search(14);
  bool found = false;
  for (const auto& h : t14.hits) found = found || (h.alpha && h.alpha->alpha == std::vector<int>{-1, -1, -1, 1, 1, -1});
  c.expect(found, "L=14 alpha not found");
  for (std::size_t len = 2; len <= 6; len += 2) {
    for (auto set : {default_symmetries(), SymmetrySet::none()}) {
      ExhaustiveOptions pruned;
      pruned.symmetries = set;
      ExhaustiveOptions unpruned = pruned;
      unpruned.prune = false;
      c.expect(exhaustive_search(len, pruned).hits == exhaustive_search(len, unpruned).hits,
               "pruned != unpruned at L=" + std::to_string(len));
    }
  }
  ExhaustiveOptions raw;
  raw.prune = false;
  raw.symmetries = SymmetrySet::none();
  auto t0 = std::chrono::steady_clock::now();
  const auto full6 = exhaustive_search(6, raw);
  const double t6 = seconds_since(t0);
  c.expect(full6.candidates == 46656, "L=6 candidate count");
  t0 = std::chrono::steady_clock::now();
  const auto t30 = template_search(30);
  const double tt = seconds_since(t0);
  c.expect(t30.candidates == 16384, "L=30 candidate count");
  c.expect(t6 < 1.0, "L=6 unpruned took " + fmt(t6));
  c.expect(tt < 1.0, "template L=30 took " + fmt(tt));
  reports = {l4, l6, full6, t14, t30, exhaustive_search(8), template_search(18)};
  return "L=6 unpruned " + fmt(t6) + ", template L=30 " + fmt(tt);
}

// Criterion 9
void oracle_equivalence(Check& c) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::size_t> dims;
    const std::size_t rank = 1 + rng() % 3;
    std::size_t total = 1;
    for (std::size_t a = 0; a < rank; ++a) {
      const std::size_t cap = rank == 1 ? 4096 : std::min<std::size_t>(64, 4096 / total);
      dims.push_back(1 + rng() % cap);
      total *= dims.back();
    }
    const auto arr = oracle::random_array(rng, dims);
    for (auto side : {Side::right, Side::left}) {
      c.expect(fft_autocorr_all(arr, side).values == full_spectrum(arr, side).values,
               "random trial " + std::to_string(trial));
    }
  }
  std::vector<std::pair<std::string, QuatArray>> arrays;
  for (int n = 2; n <= 6; ++n) arrays.emplace_back("II n=" + std::to_string(n), construct_2d(n));
  for (int n = 1; n <= 2; ++n) arrays.emplace_back("III n=" + std::to_string(n), construct_4d_iii(n));
  for (int n = 1; n <= 2; ++n) arrays.emplace_back("IV n=" + std::to_string(n), construct_4d_iv(n));
  for (const auto& [name, arr] : arrays) {
    for (auto side : {Side::right, Side::left}) {
      c.expect(fft_autocorr_all(arr, side).values == full_spectrum(arr, side).values, name);
    }
  }
}

// Criterion 10
void property_suites(Check& c, const std::vector<SearchReport>& reports) {
  for (std::uint8_t p = 0; p < 8; ++p) {
    const auto up = UnitQuat::from_code(p);
    c.expect(up * unit_conj(up) == unit::one, "inverse");
    for (std::uint8_t q = 0; q < 8; ++q) {
      const auto uq = UnitQuat::from_code(q);
      c.expect(oracle::of(up * uq) == oracle::mul(oracle::of(up), oracle::of(uq)), "table");
      c.expect(unit_conj(up * uq) == unit_conj(uq) * unit_conj(up), "conjugation");
      for (std::uint8_t r = 0; r < 8; ++r) {
        const auto ur = UnitQuat::from_code(r);
        c.expect((up * uq) * ur == up * (uq * ur), "associativity");
      }
    }
  }
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = oracle::random_sequence(rng, 1 + rng() % 64);
    const auto len = static_cast<std::int64_t>(s.size());
    for (auto side : {Side::right, Side::left}) {
      const auto spec = full_spectrum(s, side);
      for (std::int64_t tau = 1; tau < len; ++tau) {
        c.expect(spec.at(len - tau) == quat_conj(spec.at(tau)), "conjugate symmetry");
      }
    }
  }
  for (const auto& e : catalog()) {
    if (const auto* s = std::get_if<QuatSequence>(&e.payload)) {
      c.expect(is_perfect(*s, Side::left) == is_perfect(*s, Side::right), e.id + " left/right disagree");
    } else if (const auto* a = std::get_if<QuatArray>(&e.payload)) {
      c.expect(is_perfect(*a, Side::left) == is_perfect(*a, Side::right), e.id + " left/right disagree");
    }
  }
  std::size_t hits = 0;
  for (const auto& r : reports) {
    for (const auto& h : r.hits) {
      ++hits;
      c.expect(is_perfect(h.sequence, Side::left) && is_perfect(h.sequence, Side::right), "search hit");
    }
  }
  c.expect(hits > 0, "no search hits");
  for (auto axis : {Axis::i, Axis::j, Axis::k}) {
    for (std::int64_t cc = 0; cc <= 15; ++cc) {
      for (std::int64_t m = 1; m <= 4; ++m) {
        const auto sum = axis_power_sum(axis, cc, m);
        c.expect(oracle::of(sum) == oracle::power_sum(oracle::of(UnitQuat{axis}), cc, 4 * m), "sum vs oracle");
        if (cc % 4 != 0) c.expect(sum.is_zero(), "sum not zero");
      }
    }
  }
}

// Criterion 11
void float_sequence(Check& c) {
  const auto& e = entry("float-L09");
  const auto& s = std::get<FloatQuatSequence>(e.payload);
  c.expect(s.size() == 9, "length");
  for (auto side : {Side::right, Side::left}) {
    c.expect(is_perfect(s, side, 1e-9), "not perfect within 1e-9");
    c.expect(approx_equal(float_autocorr(s, 0, side), FloatQuat{18, 0, 0, 0}, 1e-9), "peak != 18");
  }
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int n, const std::string& name, const std::function<std::string(Check&)>& body) {
    Check c;
    std::string note;
    try {
      note = body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::string line = (c.ok() ? "PASS " : "FAIL ") + std::to_string(n) + " " + name;
    if (!note.empty()) line += " (" + note + ")";
    if (!c.ok()) line += ": " + c.detail();
    std::puts(line.c_str());
    std::fflush(stdout);
    if (!c.ok()) ++failed;
  };
  std::vector<SearchReport> reports;
  report(1, "correlation table of i,-j,-1,-1,k,1", [](Check& c) { example_table(c); return std::string(); });
  report(2, "19 catalog sequences perfect", [](Check& c) { catalog_sequences(c); return std::string(); });
  report(3, "power-of-two sequences", [](Check& c) { construction_one(c); return std::string(); });
  report(4, "8x8 AOP array", aop_artifact);
  report(5, "2-D arrays", construction_two);
  report(6, "4-D arrays (III)", construction_three);
  report(7, "4-D arrays (IV)", [](Check& c) { construction_four(c); return std::string(); });
  report(8, "search reproduction", [&](Check& c) { return search_reproduction(c, reports); });
  report(9, "FFT equals naive", [](Check& c) { oracle_equivalence(c); return std::string(); });
  report(10, "property suites", [&](Check& c) { property_suites(c, reports); return std::string(); });
  report(11, "float sequence of length 9", [](Check& c) { float_sequence(c); return std::string(); });
  return failed == 0 ? 0 : 1;
}
