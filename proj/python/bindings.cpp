#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "quatseq/aop_search.hpp"
#include "quatseq/catalog.hpp"
#include "quatseq/constructions.hpp"
#include "quatseq/correlation.hpp"
#include "quatseq/search.hpp"
#include "quatseq/text_format.hpp"

namespace py = pybind11;
using namespace quatseq;

namespace {

using Tokens = std::vector<std::string>;
using Quat = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

Quat to_tuple(const LipschitzQuat& q) { return {q.w, q.x, q.y, q.z}; }

QuatSequence from_tokens(const Tokens& tokens) {
  std::vector<UnitQuat> out;
  for (std::size_t n = 0; n < tokens.size(); ++n) {
    const auto u = parse_unit(tokens[n]);
    if (!u) throw ParseError("bad token '" + tokens[n] + "'", 1, n + 1);
    out.push_back(*u);
  }
  return QuatSequence(std::move(out));
}

Tokens to_tokens(std::span<const UnitQuat> elems) {
  Tokens out;
  for (auto u : elems) out.push_back(to_string(u));
  return out;
}

Tokens to_tokens(const QuatSequence& s) { return to_tokens(std::span<const UnitQuat>(s.begin(), s.end())); }

Side parse_side(const std::string& side) {
  if (side == "right") return Side::right;
  if (side == "left") return Side::left;
  throw std::invalid_argument("side must be 'left' or 'right'");
}

// Text with a dims: line is an array, other text a sequence; a token list
// is a sequence.
QuatArray to_array(const std::variant<std::string, Tokens>& input) {
  if (const auto* tokens = std::get_if<Tokens>(&input)) return QuatArray::from_sequence(from_tokens(*tokens));
  const auto& text = std::get<std::string>(input);
  if (text.find("dims:") != std::string::npos) return parse_array(text);
  return QuatArray::from_sequence(parse_sequence(text));
}

py::dict array_dict(const QuatArray& a) {
  py::dict d;
  d["dims"] = a.dims();
  d["elements"] = to_tokens(a.elems());
  return d;
}

py::dict report_dict(const SearchReport& r) {
  py::list hits;
  for (const auto& h : r.hits) {
    py::dict hit;
    hit["sequence"] = serialize_sequence(h.sequence);
    if (h.alpha) hit["alpha"] = h.alpha->alpha;
    if (h.index_spec) hit["index_function"] = to_string(*h.index_spec);
    hits.append(hit);
  }
  py::dict d;
  d["kind"] = r.kind;
  d["parameters"] = r.parameters;
  d["candidates"] = r.candidates;
  d["exhausted"] = r.exhausted;
  d["wall_seconds"] = r.wall_seconds;
  d["hits"] = hits;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Perfect sequences and arrays over the unit quaternions";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("parse_sequence", [](const std::string& text) { return to_tokens(parse_sequence(text)); });
  m.def("serialize_sequence", [](const Tokens& tokens) { return serialize_sequence(from_tokens(tokens)); });
  m.def("parse_array", [](const std::string& text) { return array_dict(parse_array(text)); });
  m.def("serialize_array", [](const std::vector<std::size_t>& dims, const Tokens& elements) {
    const auto seq = from_tokens(elements);
    return serialize_array(QuatArray(dims, std::vector<UnitQuat>(seq.begin(), seq.end())));
  });

  m.def(
      "autocorr",
      [](const Tokens& seq, std::int64_t tau, const std::string& side) {
        return to_tuple(autocorr(from_tokens(seq), tau, parse_side(side)));
      },
      py::arg("sequence"), py::arg("tau"), py::arg("side") = "right",
      "Periodic autocorrelation at one shift as (w, x, y, z).");

  m.def(
      "spectrum",
      [](const std::variant<std::string, Tokens>& input, const std::string& side, const std::string& method,
         std::size_t budget) {
        const auto arr = to_array(input);
        SpectrumOptions opts;
        opts.naive_budget = budget;
        CorrelationSpectrum s;
        if (method == "fft") {
          s = fft_autocorr_all(arr, parse_side(side));
        } else if (method == "naive") {
          s = full_spectrum(arr, parse_side(side), opts);
        } else if (method == "auto") {
          s = auto_spectrum(arr, parse_side(side), opts);
        } else {
          throw std::invalid_argument("method must be auto, naive or fft");
        }
        if (arr.rank() == 1) finalize_spectrum(s);
        py::dict d;
        d["dims"] = s.dims;
        std::vector<Quat> values;
        for (const auto& v : s.values) values.push_back(to_tuple(v));
        d["values"] = values;
        d["perfect"] = s.perfect;
        d["zcz"] = s.zcz;
        d["odd_perfect"] = s.odd_perfect;
        d["method"] = s.method == SpectrumMethod::fft ? "fft" : "naive";
        return d;
      },
      py::arg("input"), py::arg("side") = "right", py::arg("method") = "auto",
      py::arg("budget") = std::size_t{1} << 20);

  m.def(
      "is_perfect",
      [](const std::variant<std::string, Tokens>& input, const std::string& side) {
        return auto_spectrum(to_array(input), parse_side(side)).perfect;
      },
      py::arg("input"), py::arg("side") = "right");

  m.def(
      "construct", [](const std::string& name, int n) { return array_dict(construct_by_name(name, n)); },
      py::arg("name"), py::arg("n") = 0);
  m.def("flatten", [](const std::vector<std::size_t>& dims, const Tokens& elements) {
    const auto seq = from_tokens(elements);
    return to_tokens(flatten_row_major(QuatArray(dims, std::vector<UnitQuat>(seq.begin(), seq.end()))));
  });
  m.def("template_sequence", [](const std::vector<int>& alpha) {
    return to_tokens(template_sequence(TemplateSpec{alpha}));
  });

  m.def("aop_check", [](const std::string& text) {
    const auto r = aop_check(parse_array(text));
    py::dict d;
    d["plain"] = r.plain;
    d["cyclic"] = r.cyclic;
    return d;
  });

  m.def(
      "exhaustive_search",
      [](std::size_t length, bool prune, const std::string& symmetries, std::size_t limit, unsigned jobs) {
        ExhaustiveOptions opts;
        opts.prune = prune;
        opts.symmetries = symmetries == "default" ? default_symmetries() : parse_symmetry_set(symmetries);
        opts.limit = limit;
        opts.jobs = jobs;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = exhaustive_search(length, opts);
        }
        return report_dict(r);
      },
      py::arg("length"), py::arg("prune") = true, py::arg("symmetries") = "default", py::arg("limit") = 0,
      py::arg("jobs") = 1);

  m.def(
      "template_search",
      [](std::size_t length, std::size_t limit, unsigned jobs) {
        TemplateSearchOptions opts;
        opts.limit = limit;
        opts.jobs = jobs;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = template_search(length, opts);
        }
        return report_dict(r);
      },
      py::arg("length"), py::arg("limit") = 0, py::arg("jobs") = 1);

  m.def("catalog_dir", [] { return default_catalog_dir().string(); });
  m.def(
      "verify_catalog",
      [](const std::optional<std::string>& dir) {
        const auto result = verify_catalog(load_catalog(dir ? std::filesystem::path(*dir) : default_catalog_dir()));
        py::list out;
        for (const auto& e : result.entries) {
          py::dict d;
          d["id"] = e.id;
          d["passed"] = e.passed;
          d["summary"] = e.summary;
          d["failures"] = e.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("dir") = py::none());
}
