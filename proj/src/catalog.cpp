#include "quatseq/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace quatseq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view text, std::size_t line) {
  if (text.empty()) throw ParseError("expected an integer", line);
  std::size_t pos = 0;
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == text.size()) throw ParseError("expected an integer", line);
  std::int64_t value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') throw ParseError("expected an integer, found '" + std::string(text) + "'", line);
    value = value * 10 + (ch - '0');
  }
  return negative ? -value : value;
}

Expectation parse_expectation(std::string_view text, std::size_t line) {
  Expectation e;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "perfect") {
      e.perfect = true;
    } else if (tok == "not-perfect") {
      e.perfect = false;
    } else if (tok == "odd-perfect") {
      e.odd_perfect = true;
    } else if (tok.rfind("zcz=", 0) == 0) {
      const auto z = parse_int(std::string_view(tok).substr(4), line);
      if (z < 0) throw ParseError("zcz must be non-negative", line);
      e.zcz = static_cast<std::size_t>(z);
    } else if (tok.rfind("value@", 0) == 0) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("expected value@tau=q", line);
      const auto tau = parse_int(std::string_view(tok).substr(6, eq - 6), line);
      const auto q = parse_lipschitz(std::string_view(tok).substr(eq + 1));
      if (!q) throw ParseError("malformed quaternion in '" + tok + "'", line);
      e.values.emplace_back(tau, *q);
    } else {
      throw ParseError("unknown expectation '" + tok + "'", line);
    }
  }
  return e;
}

std::string format_expectation(const Expectation& e) {
  std::vector<std::string> parts;
  if (e.perfect) parts.push_back(*e.perfect ? "perfect" : "not-perfect");
  if (e.odd_perfect) parts.push_back("odd-perfect");
  if (e.zcz) parts.push_back("zcz=" + std::to_string(*e.zcz));
  for (const auto& [tau, q] : e.values) parts.push_back("value@" + std::to_string(tau) + "=" + to_string(q));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

void fail(EntryVerification& v, std::string message) {
  v.passed = false;
  v.failures.push_back(std::move(message));
}

void check_unit_spectra(EntryVerification& v, const Expectation& e, const CorrelationSpectrum& right,
                        const CorrelationSpectrum& left) {
  if (right.perfect != left.perfect) {
    fail(v, "left and right perfection disagree");
  }
  if (e.perfect && right.perfect != *e.perfect) {
    fail(v, std::string("expected ") + (*e.perfect ? "perfect" : "not perfect") + ", found " +
                (right.perfect ? "perfect" : "not perfect"));
  }
  if (e.odd_perfect) {
    if (!right.odd_perfect) {
      fail(v, "odd-perfect needs a 1-D entry");
    } else {
      if (!*right.odd_perfect) fail(v, "expected odd-perfect (right)");
      if (!*left.odd_perfect) fail(v, "expected odd-perfect (left)");
    }
  }
  if (e.zcz) {
    if (!right.zcz) {
      fail(v, "zcz needs a 1-D entry");
    } else {
      if (*right.zcz != *e.zcz) {
        fail(v, "expected zcz " + std::to_string(*e.zcz) + ", found " + std::to_string(*right.zcz));
      }
      if (*left.zcz != *right.zcz) fail(v, "left and right zcz disagree");
    }
  }
  for (const auto& [tau, q] : e.values) {
    if (right.rank() != 1) {
      fail(v, "value checks need a 1-D entry");
      break;
    }
    const auto got = right.at(tau);
    if (got != q) {
      fail(v, "expected theta(" + std::to_string(tau) + ") = " + to_string(q) + ", found " + to_string(got));
    }
  }
  v.summary = std::string(right.perfect ? "perfect" : "not perfect") + " (left and right), " +
              (right.method == SpectrumMethod::fft ? "fft" : "naive");
  if (right.zcz) v.summary += ", zcz " + std::to_string(*right.zcz);
}

}  // namespace

CatalogEntry parse_entry(std::string_view text) {
  CatalogEntry entry;
  bool float_alphabet = false;
  std::optional<std::string> dims;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t body_start = text.size();
  std::size_t body_line = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    const auto line = trim(text.substr(pos, end - pos));
    ++line_no;
    const auto colon = line.find(':');
    const bool header = !line.empty() && line.front() != '#' && colon != std::string_view::npos;
    if (!line.empty() && line.front() != '#' && !header) {
      body_start = pos;
      body_line = line_no;
      break;
    }
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (!header) continue;
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (key == "id") {
      entry.id = value;
    } else if (key == "source") {
      entry.source = value;
    } else if (key == "dims") {
      dims = std::string(value);
    } else if (key == "alphabet") {
      if (value == "float") {
        float_alphabet = true;
      } else if (value != "unit") {
        throw ParseError("unknown alphabet '" + std::string(value) + "'", line_no);
      }
    } else if (key == "expect") {
      entry.expect = parse_expectation(value, line_no);
    } else {
      throw ParseError("unknown header '" + std::string(key) + "'", line_no);
    }
  }
  if (entry.id.empty()) throw ParseError("entry has no id");
  if (body_start == text.size()) throw ParseError("entry '" + entry.id + "' has no elements");

  const auto body = text.substr(body_start);
  try {
    if (float_alphabet) {
      if (dims) throw ParseError("float entries must be sequences");
      entry.payload = parse_float_sequence(body);
    } else if (dims) {
      entry.payload = parse_array("dims: " + *dims + "\n" + std::string(body));
    } else {
      entry.payload = parse_sequence(body);
    }
  } catch (const ParseError& e) {
    // Re-base the line number onto the whole file.
    const std::size_t line = e.line() == 0 ? 0 : e.line() + body_line - (dims && !float_alphabet ? 2 : 1);
    throw ParseError(e.message(), line, e.token());
  }
  return entry;
}

std::string serialize_entry(const CatalogEntry& entry) {
  std::string out = "id: " + entry.id + "\n";
  if (!entry.source.empty()) out += "source: " + entry.source + "\n";
  std::string body;
  if (const auto* seq = std::get_if<QuatSequence>(&entry.payload)) {
    body = serialize_sequence(*seq);
  } else if (const auto* arr = std::get_if<QuatArray>(&entry.payload)) {
    out += "dims: " + format_dims(arr->dims()) + "\n";
    body = serialize_array(*arr);
    body = body.substr(body.find('\n') + 1);
  } else {
    out += "alphabet: float\n";
    body = serialize_float_sequence(std::get<FloatQuatSequence>(entry.payload));
  }
  const auto expect = format_expectation(entry.expect);
  if (!expect.empty()) out += "expect: " + expect + "\n";
  return out + body + "\n";
}

CatalogEntry load_entry(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_entry(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.message(), e.line(), e.token());
  }
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("catalog directory '" + dir.string() + "' not found");
  }
  std::vector<CatalogEntry> entries;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    const auto ext = f.path().extension();
    if (f.is_regular_file() && (ext == ".qseq" || ext == ".qarr")) entries.push_back(load_entry(f.path()));
  }
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return entries;
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("QUATSEQ_CATALOG"); env != nullptr && *env != '\0') return env;
  return QUATSEQ_DEFAULT_CATALOG_DIR;
}

bool CatalogVerification::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const EntryVerification& v) { return v.passed; });
}

EntryVerification verify_entry(const CatalogEntry& entry, const SpectrumOptions& opts) {
  EntryVerification v;
  v.id = entry.id;
  if (const auto* fseq = std::get_if<FloatQuatSequence>(&entry.payload)) {
    const bool right = is_perfect(*fseq, Side::right);
    const bool left = is_perfect(*fseq, Side::left);
    if (right != left) fail(v, "left and right perfection disagree");
    if (entry.expect.perfect && right != *entry.expect.perfect) {
      fail(v, std::string("expected ") + (*entry.expect.perfect ? "perfect" : "not perfect"));
    }
    if (entry.expect.odd_perfect || entry.expect.zcz || !entry.expect.values.empty()) {
      fail(v, "float entries support only perfect / not-perfect");
    }
    std::ostringstream summary;
    summary << (right ? "perfect" : "not perfect") << " (float, tolerance " << kFloatTolerance << ")";
    v.summary = summary.str();
    return v;
  }
  if (const auto* seq = std::get_if<QuatSequence>(&entry.payload)) {
    check_unit_spectra(v, entry.expect, auto_spectrum(*seq, Side::right, opts),
                       auto_spectrum(*seq, Side::left, opts));
  } else {
    const auto& arr = std::get<QuatArray>(entry.payload);
    check_unit_spectra(v, entry.expect, auto_spectrum(arr, Side::right, opts),
                       auto_spectrum(arr, Side::left, opts));
  }
  return v;
}

CatalogVerification verify_catalog(const std::vector<CatalogEntry>& entries, const SpectrumOptions& opts) {
  CatalogVerification out;
  out.entries.reserve(entries.size());
  for (const auto& e : entries) out.entries.push_back(verify_entry(e, opts));
  return out;
}

}  // namespace quatseq
