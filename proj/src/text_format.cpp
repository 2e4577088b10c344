#include "quatseq/text_format.hpp"

#include <cctype>
#include <vector>

namespace quatseq {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t token)
    : std::runtime_error([&] {
        std::string where;
        if (line != 0) where += "line " + std::to_string(line);
        if (token != 0) where += (where.empty() ? "" : ", ") + std::string("token ") + std::to_string(token);
        return where.empty() ? message : where + ": " + message;
      }()),
      message_(message),
      line_(line),
      token_(token) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t index;  // 1-based over the whole body
};

// Splits the non-comment, non-header lines into tokens. Commas separate
// tokens; a line break after a token also ends it. Header lines
// ("key: value") are only accepted for dims, returned through dims_value.
std::vector<Token> tokenize(std::string_view text, std::string_view* dims_value) {
  enum class State { need, have, soft };
  std::vector<Token> tokens;
  State state = State::need;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.find(':') != std::string_view::npos) {
      const auto key = trim(line.substr(0, line.find(':')));
      if (key == "dims" && dims_value != nullptr) {
        *dims_value = trim(line.substr(line.find(':') + 1));
        continue;
      }
      throw ParseError("unexpected header '" + std::string(key) + "'", line_no);
    }
    std::size_t n = 0;
    while (n < line.size()) {
      const char c = line[n];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++n;
      } else if (c == ',') {
        if (state == State::need) throw ParseError("empty token", line_no, tokens.size() + 1);
        state = State::need;
        ++n;
      } else {
        const auto end = line.find_first_of(", \t\r", n);
        const auto tok = line.substr(n, end == std::string_view::npos ? std::string_view::npos : end - n);
        if (state == State::have) throw ParseError("missing comma before '" + std::string(tok) + "'", line_no, tokens.size() + 1);
        tokens.push_back({tok, line_no, tokens.size() + 1});
        state = State::have;
        n += tok.size();
      }
    }
    if (state == State::have) state = State::soft;
    last_line = line_no;
  }
  if (state == State::need && !tokens.empty()) throw ParseError("empty token", last_line, tokens.size() + 1);
  return tokens;
}

std::vector<UnitQuat> parse_units(const std::vector<Token>& tokens) {
  std::vector<UnitQuat> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    const auto u = parse_unit(t.text);
    if (!u) throw ParseError("unknown token '" + std::string(t.text) + "'", t.line, t.index);
    out.push_back(*u);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> parse_dims(std::string_view text) {
  std::vector<std::size_t> dims;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto x = text.find('x', pos);
    const auto part = trim(text.substr(pos, x == std::string_view::npos ? std::string_view::npos : x - pos));
    if (part.empty()) throw ParseError("malformed dims '" + std::string(text) + "'");
    std::size_t value = 0;
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError("malformed dims '" + std::string(text) + "'");
      }
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (value == 0) throw ParseError("dims must be positive");
    dims.push_back(value);
    if (x == std::string_view::npos) break;
    pos = x + 1;
  }
  return dims;
}

std::string format_dims(std::span<const std::size_t> dims) {
  std::string out;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    if (a != 0) out += " x ";
    out += std::to_string(dims[a]);
  }
  return out;
}

QuatSequence parse_sequence(std::string_view text) {
  const auto tokens = tokenize(text, nullptr);
  if (tokens.empty()) throw ParseError("empty sequence");
  return QuatSequence(parse_units(tokens));
}

std::string serialize_sequence(const QuatSequence& seq) {
  std::string out;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (n != 0) out += ',';
    out += to_string(seq[n]);
  }
  return out;
}

QuatArray parse_array(std::string_view text) {
  std::string_view dims_text;
  const auto tokens = tokenize(text, &dims_text);
  if (dims_text.empty()) throw ParseError("array text needs a 'dims:' line");
  const auto dims = parse_dims(dims_text);
  const auto expected = product(dims);
  auto elems = parse_units(tokens);
  if (elems.size() != expected) {
    throw ParseError("dims " + format_dims(dims) + " need " + std::to_string(expected) +
                     " elements, found " + std::to_string(elems.size()));
  }
  return QuatArray(dims, std::move(elems));
}

std::string serialize_array(const QuatArray& array) {
  std::string out = "dims: " + format_dims(array.dims()) + "\n";
  const std::size_t row = array.dims().back();
  for (std::size_t n = 0; n < array.size(); ++n) {
    out += to_string(array[n]);
    out += (n + 1) % row == 0 ? '\n' : ',';
  }
  out.pop_back();
  return out;
}

FloatQuatSequence parse_float_sequence(std::string_view text) {
  const auto tokens = tokenize(text, nullptr);
  if (tokens.empty()) throw ParseError("empty sequence");
  FloatQuatSequence seq;
  for (const auto& t : tokens) {
    const auto q = parse_float_quat(t.text);
    if (!q) throw ParseError("malformed quaternion '" + std::string(t.text) + "'", t.line, t.index);
    seq.elems.push_back(*q);
  }
  return seq;
}

std::string serialize_float_sequence(const FloatQuatSequence& seq) {
  std::string out;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (n != 0) out += ',';
    out += to_string(seq.elems[n]);
  }
  return out;
}

}  // namespace quatseq
