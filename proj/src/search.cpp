#include "quatseq/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quatseq/correlation.hpp"
#include "quatseq/parallel.hpp"
#include "quatseq/text_format.hpp"
#include "search_runner.hpp"

namespace quatseq {

bool SearchReport::same_results(const SearchReport& other) const {
  return kind == other.kind && parameters == other.parameters && seed == other.seed &&
         candidates == other.candidates && hits == other.hits && exhausted == other.exhausted;
}

namespace {

constexpr std::string_view kCheckpointMagic = "# quatseq search checkpoint";

void write_file_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint '" + tmp + "'");
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write checkpoint '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string serialize_checkpoint(const SearchReport& report, std::size_t range_count,
                                 std::size_t cursor) {
  std::ostringstream out;
  out << kCheckpointMagic << '\n';
  out << "kind: " << report.kind << '\n';
  for (const auto& [key, value] : report.parameters) out << "param " << key << ": " << value << '\n';
  out << "seed: " << report.seed << '\n';
  out << "ranges: " << range_count << '\n';
  out << "cursor: " << cursor << '\n';
  out << "candidates: " << report.candidates << '\n';
  out << "exhausted: " << bool_text(report.exhausted) << '\n';
  for (const auto& hit : report.hits) out << "hit: " << serialize_sequence(hit.sequence) << '\n';
  return out.str();
}

Checkpoint parse_checkpoint(const std::string& text) {
  Checkpoint cp;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool magic = false;
  bool have_ranges = false;
  bool have_cursor = false;
  auto to_u64 = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      throw ParseError("expected an unsigned integer, found '" + v + "'", line_no);
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == kCheckpointMagic) {
      magic = true;
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no);
    const std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    if (key == "kind") {
      cp.report.kind = value;
    } else if (key.rfind("param ", 0) == 0) {
      cp.report.parameters.emplace_back(key.substr(6), value);
    } else if (key == "seed") {
      cp.report.seed = to_u64(value);
    } else if (key == "ranges") {
      cp.range_count = to_u64(value);
      have_ranges = true;
    } else if (key == "cursor") {
      cp.cursor = to_u64(value);
      have_cursor = true;
    } else if (key == "candidates") {
      cp.report.candidates = to_u64(value);
    } else if (key == "exhausted") {
      if (value != "true" && value != "false") throw ParseError("expected true or false", line_no);
      cp.report.exhausted = value == "true";
    } else if (key == "hit") {
      try {
        SearchHit hit{parse_sequence(value), std::nullopt, std::nullopt};
        if (cp.report.kind == "template") hit.alpha = extract_template(hit.sequence);
        cp.report.hits.push_back(std::move(hit));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  if (!magic) throw ParseError("not a checkpoint file");
  if (!have_ranges || !have_cursor) throw ParseError("checkpoint lacks ranges or cursor");
  if (cp.cursor > cp.range_count) throw ParseError("cursor beyond range count");
  return cp;
}

namespace detail {

void run_ranges(SearchReport& report, std::size_t range_count, std::size_t limit, unsigned jobs,
                const CheckpointOptions& checkpoint, bool dedupe,
                const std::function<RangeOutput(std::size_t)>& fn) {
  std::size_t cursor = 0;
  std::set<QuatSequence> seen;
  if (checkpoint.resume && !checkpoint.path.empty()) {
    if (const auto text = read_file(checkpoint.path)) {
      auto cp = parse_checkpoint(*text);
      if (cp.report.kind != report.kind || cp.report.parameters != report.parameters ||
          cp.report.seed != report.seed || cp.range_count != range_count) {
        throw std::invalid_argument("checkpoint '" + checkpoint.path +
                                    "' belongs to a different search");
      }
      report.candidates = cp.report.candidates;
      report.hits = std::move(cp.report.hits);
      report.exhausted = cp.report.exhausted;
      cursor = cp.cursor;
      for (const auto& h : report.hits) seen.insert(h.sequence);
    }
  }
  auto limit_reached = [&] { return limit != 0 && report.hits.size() >= limit; };
  if (limit_reached()) {
    if (cursor < range_count) report.exhausted = false;
    return;
  }

  const std::size_t start = cursor;
  std::vector<std::optional<RangeOutput>> slots(range_count);
  std::mutex merge_mutex;
  std::atomic<bool> stop{false};

  auto merge_ready = [&] {
    bool advanced = false;
    while (cursor < range_count && slots[cursor] && !limit_reached()) {
      auto& out = *slots[cursor];
      report.candidates += out.candidates;
      for (auto& h : out.hits) {
        if (limit_reached()) {
          report.exhausted = false;
          break;
        }
        if (dedupe && !seen.insert(h.sequence).second) continue;
        report.hits.push_back(std::move(h));
      }
      slots[cursor].reset();
      ++cursor;
      advanced = true;
    }
    if (limit_reached()) {
      if (cursor < range_count) report.exhausted = false;
      stop = true;
    }
    if (advanced && !checkpoint.path.empty()) {
      write_file_atomically(checkpoint.path, serialize_checkpoint(report, range_count, cursor));
    }
  };

  parallel_for(range_count - start, jobs, [&](std::size_t n) {
    if (stop) return;
    auto out = fn(start + n);
    std::lock_guard lock(merge_mutex);
    slots[start + n] = std::move(out);
    merge_ready();
  });
}

}  // namespace detail

namespace {

// Pure units in code order: i, j, k, -i, -j, -k.
constexpr std::array<std::uint8_t, 6> kPureCodes = {1, 2, 3, 5, 6, 7};

struct Term {
  std::uint8_t component;
  std::int8_t sign;
};

// term[a][b] = a · conj(b) as a signed basis element.
constexpr auto kTerms = [] {
  std::array<std::array<Term, 8>, 8> t{};
  for (std::uint8_t a = 0; a < 8; ++a) {
    for (std::uint8_t b = 0; b < 8; ++b) {
      const auto p = unit_mul(UnitQuat::from_code(a), unit_conj(UnitQuat::from_code(b)));
      t[a][b] = {static_cast<std::uint8_t>(p.axis()), static_cast<std::int8_t>(p.negative() ? -1 : 1)};
    }
  }
  return t;
}();

class ExhaustiveWalker {
 public:
  ExhaustiveWalker(std::size_t length, bool prune)
      : len_(length), half_(length / 2), prune_(prune), codes_(length, 0),
        sums_((length + 1) * (half_ + 1)) {}

  // Assigns position p (positions < p already set). Returns false if pruned.
  bool assign(std::size_t p, std::uint8_t code) {
    codes_[p] = code;
    const auto* prev = &sums_[p * (half_ + 1)];
    auto* cur = &sums_[(p + 1) * (half_ + 1)];
    for (std::size_t tau = 1; tau <= half_; ++tau) {
      auto s = prev[tau];
      if (p >= tau) {
        const auto& t = kTerms[codes_[p - tau]][code];
        s[t.component] += t.sign;
      }
      if (p + tau >= len_) {
        const auto& t = kTerms[code][codes_[p + tau - len_]];
        s[t.component] += t.sign;
      }
      cur[tau] = s;
      if (prune_) {
        const std::size_t depth = p + 1;
        const std::size_t determined = (depth > tau ? depth - tau : 0) +
                                       (depth > len_ - tau ? depth - (len_ - tau) : 0);
        const int remaining = static_cast<int>(len_ - determined);
        if (std::abs(s[0]) + std::abs(s[1]) + std::abs(s[2]) + std::abs(s[3]) > remaining) {
          return false;
        }
      }
    }
    return true;
  }

  bool leaf_is_zero() const {
    const auto* cur = &sums_[len_ * (half_ + 1)];
    for (std::size_t tau = 1; tau <= half_; ++tau) {
      if (cur[tau] != std::array<int, 4>{}) return false;
    }
    return true;
  }

  template <typename OnLeaf>
  void walk(std::size_t p, OnLeaf& on_leaf) {
    if (p == len_) {
      on_leaf(codes_);
      return;
    }
    for (auto c : kPureCodes) {
      if (assign(p, c)) walk(p + 1, on_leaf);
    }
  }

 private:
  std::size_t len_;
  std::size_t half_;
  bool prune_;
  std::vector<std::uint8_t> codes_;
  std::vector<std::array<int, 4>> sums_;
};

QuatSequence from_codes(const std::vector<std::uint8_t>& codes) {
  std::vector<UnitQuat> elems;
  elems.reserve(codes.size());
  for (auto c : codes) elems.push_back(UnitQuat::from_code(c));
  return QuatSequence(std::move(elems));
}

}  // namespace

SearchReport exhaustive_search(std::size_t length, const ExhaustiveOptions& opts) {
  if (length == 0 || length % 2 != 0) {
    // Each term of θ(τ) moves one component by ±1, so the component sum of
    // θ(τ) has the parity of L and cannot vanish for odd L.
    throw std::invalid_argument("no perfect sequences of odd length over {±i, ±j, ±k}");
  }
  if (length > opts.max_length) {
    throw std::invalid_argument("length " + std::to_string(length) + " exceeds max_length " +
                                std::to_string(opts.max_length));
  }
  detail::Stopwatch clock;
  SearchReport report;
  report.kind = "exhaustive";
  report.parameters = {{"length", std::to_string(length)},
                       {"limit", std::to_string(opts.limit)},
                       {"prune", bool_text(opts.prune)},
                       {"symmetries", to_string(opts.symmetries)}};

  const bool fix_first = opts.symmetries.contains(Symmetry::automorphism);
  const std::size_t fixed = fix_first ? 1 : 0;
  const std::size_t split = std::min<std::size_t>(2, length - fixed);
  std::size_t range_count = 1;
  for (std::size_t n = 0; n < split; ++n) range_count *= kPureCodes.size();

  auto run = [&](std::size_t range) {
    detail::RangeOutput out;
    ExhaustiveWalker walker(length, opts.prune);
    if (fix_first && !walker.assign(0, unit::i.code())) return out;
    std::size_t digits = range;
    std::array<std::uint8_t, 2> prefix{};
    for (std::size_t n = split; n-- > 0;) {
      prefix[n] = kPureCodes[digits % kPureCodes.size()];
      digits /= kPureCodes.size();
    }
    for (std::size_t n = 0; n < split; ++n) {
      if (!walker.assign(fixed + n, prefix[n])) return out;
    }
    auto on_leaf = [&](const std::vector<std::uint8_t>& codes) {
      ++out.candidates;
      if (!walker.leaf_is_zero()) return;
      auto seq = from_codes(codes);
      if (!is_perfect(seq, Side::right) || !is_perfect(seq, Side::left)) {
        throw std::logic_error("incremental correlation disagrees with the correlation module");
      }
      if (!opts.symmetries.empty()) seq = canonical_form(seq, opts.symmetries);
      out.hits.push_back({std::move(seq), std::nullopt, std::nullopt});
    };
    walker.walk(fixed + split, on_leaf);
    return out;
  };

  detail::run_ranges(report, range_count, opts.limit, opts.jobs, opts.checkpoint, true, run);
  std::sort(report.hits.begin(), report.hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.sequence < b.sequence; });
  report.wall_seconds = clock.seconds();
  return report;
}

TemplateSpec template_alpha_from_index(std::uint64_t index, std::size_t m) {
  TemplateSpec spec;
  spec.alpha.resize(m);
  for (std::size_t t = 0; t < m; ++t) spec.alpha[t] = ((index >> (m - 1 - t)) & 1u) != 0 ? -1 : 1;
  return spec;
}

SearchReport template_search(std::size_t length, const TemplateSearchOptions& opts) {
  if (length < 6 || length % 4 != 2) {
    throw std::invalid_argument("template search needs L ≡ 2 (mod 4) and L >= 6");
  }
  const std::size_t m = (length - 2) / 2;
  if (m > 40) throw std::invalid_argument("template search is limited to L <= 82");
  detail::Stopwatch clock;
  SearchReport report;
  report.kind = "template";
  report.parameters = {{"length", std::to_string(length)}, {"limit", std::to_string(opts.limit)}};

  const std::size_t range_bits = std::min<std::size_t>(m, 6);
  const std::size_t range_count = std::size_t{1} << range_bits;
  const std::uint64_t per_range = std::uint64_t{1} << (m - range_bits);

  auto run = [&](std::size_t range) {
    detail::RangeOutput out;
    const std::uint64_t first = static_cast<std::uint64_t>(range) * per_range;
    for (std::uint64_t index = first; index < first + per_range; ++index) {
      ++out.candidates;
      auto spec = template_alpha_from_index(index, m);
      auto seq = template_sequence(spec);
      if (is_perfect(seq, Side::right) && is_perfect(seq, Side::left)) {
        out.hits.push_back({std::move(seq), std::move(spec), std::nullopt});
      }
    }
    return out;
  };

  detail::run_ranges(report, range_count, opts.limit, opts.jobs, opts.checkpoint, false, run);
  report.wall_seconds = clock.seconds();
  return report;
}

}  // namespace quatseq
