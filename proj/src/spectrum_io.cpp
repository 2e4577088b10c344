#include "quatseq/spectrum_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "quatseq/text_format.hpp"

namespace quatseq {

namespace {

std::string method_name(SpectrumMethod m) { return m == SpectrumMethod::fft ? "fft" : "naive"; }

std::string shift_text(const std::vector<std::size_t>& shift) {
  std::string out;
  for (std::size_t a = 0; a < shift.size(); ++a) {
    if (a != 0) out += ',';
    out += std::to_string(shift[a]);
  }
  return out;
}

nlohmann::json quat_json(const LipschitzQuat& q) { return {q.w, q.x, q.y, q.z}; }

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "structured") return OutputFormat::structured;
  throw std::invalid_argument("unknown format '" + text + "'");
}

std::string spectrum_header(const CorrelationSpectrum& spectrum) {
  std::string out = "dims: " + format_dims(spectrum.dims) + "; side: " + to_string(spectrum.side) +
                    "; perfect: " + (spectrum.perfect ? "true" : "false");
  if (spectrum.odd_perfect) out += std::string("; odd-perfect: ") + (*spectrum.odd_perfect ? "true" : "false");
  if (spectrum.zcz) out += "; zcz: " + std::to_string(*spectrum.zcz);
  out += "; method: " + method_name(spectrum.method);
  return out;
}

void write_spectrum(std::ostream& out, const CorrelationSpectrum& spectrum, OutputFormat format) {
  if (format == OutputFormat::text) {
    out << spectrum_header(spectrum) << '\n';
    for (std::size_t n = 0; n < spectrum.values.size(); ++n) {
      out << shift_text(spectrum.shift_of(n)) << " : " << to_string(spectrum.values[n]) << '\n';
    }
    return;
  }
  nlohmann::json header = {{"record", "spectrum"},
                           {"dims", spectrum.dims},
                           {"side", to_string(spectrum.side)},
                           {"perfect", spectrum.perfect},
                           {"peak", quat_json(spectrum.peak)},
                           {"method", method_name(spectrum.method)}};
  if (spectrum.odd_perfect) header["odd_perfect"] = *spectrum.odd_perfect;
  if (spectrum.zcz) header["zcz"] = *spectrum.zcz;
  out << header.dump() << '\n';
  for (std::size_t n = 0; n < spectrum.values.size(); ++n) {
    const nlohmann::json row = {{"shift", spectrum.shift_of(n)}, {"value", quat_json(spectrum.values[n])}};
    out << row.dump() << '\n';
  }
}

void write_search_report(std::ostream& out, const SearchReport& report, OutputFormat format) {
  if (format == OutputFormat::text) {
    out << "search: " << report.kind << '\n';
    for (const auto& [key, value] : report.parameters) out << key << ": " << value << '\n';
    if (report.kind == "aop") out << "seed: " << report.seed << '\n';
    out << "candidates: " << report.candidates << '\n';
    out << "hits: " << report.hits.size() << '\n';
    out << "exhausted: " << (report.exhausted ? "true" : "false") << '\n';
    out << "wall_seconds: " << report.wall_seconds << '\n';
    for (const auto& hit : report.hits) {
      out << serialize_sequence(hit.sequence);
      if (hit.alpha) {
        out << "  alpha=";
        for (int a : hit.alpha->alpha) out << (a > 0 ? '+' : '-');
      }
      if (hit.index_spec) out << "  " << to_string(*hit.index_spec);
      out << '\n';
    }
    return;
  }
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  const nlohmann::json header = {{"record", "search"},     {"kind", report.kind},
                                 {"parameters", params},   {"seed", report.seed},
                                 {"candidates", report.candidates},
                                 {"exhausted", report.exhausted},
                                 {"wall_seconds", report.wall_seconds},
                                 {"hits", report.hits.size()}};
  out << header.dump() << '\n';
  for (const auto& hit : report.hits) {
    nlohmann::json h = {{"record", "hit"}, {"sequence", serialize_sequence(hit.sequence)}};
    if (hit.alpha) h["alpha"] = hit.alpha->alpha;
    if (hit.index_spec) h["index_function"] = to_string(*hit.index_spec);
    out << h.dump() << '\n';
  }
}

}  // namespace quatseq
