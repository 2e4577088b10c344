#include "quatseq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatseq/catalog.hpp"
#include "quatseq/constructions.hpp"
#include "quatseq/correlation.hpp"
#include "quatseq/search.hpp"
#include "quatseq/spectrum_io.hpp"
#include "quatseq/text_format.hpp"

namespace quatseq::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string output;
  unsigned jobs = 1;
};

struct SpectrumFlags {
  std::size_t budget = std::size_t{1} << 20;
  bool fft = false;
  bool naive = false;
  std::string side = "both";
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  ss << file.rdbuf();
  return ss.str();
}

// Writes to the --output file when one is given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

using Input = std::variant<QuatSequence, QuatArray, FloatQuatSequence>;

bool has_header(std::string_view text, std::string_view key) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.rfind(key, 0) == 0 && line.substr(key.size()).find(':') == 0) return true;
    pos = nl + 1;
  }
  return false;
}

Input parse_input(const std::string& text) {
  if (has_header(text, "id")) return parse_entry(text).payload;
  if (has_header(text, "dims")) return parse_array(text);
  try {
    return parse_sequence(text);
  } catch (const ParseError& unit_error) {
    try {
      return parse_float_sequence(text);
    } catch (const ParseError&) {
      throw unit_error;
    }
  }
}

std::vector<Side> sides_of(const std::string& side) {
  if (side == "left") return {Side::left};
  if (side == "right") return {Side::right};
  if (side == "both") return {Side::right, Side::left};
  throw UsageError("--side must be left, right or both");
}

CorrelationSpectrum spectrum_of(const QuatArray& a, Side side, const SpectrumFlags& flags, unsigned jobs) {
  SpectrumOptions opts;
  opts.naive_budget = flags.budget;
  opts.jobs = jobs;
  if (flags.fft) return fft_autocorr_all(a, side);
  if (flags.naive) return full_spectrum(a, side, opts);
  return auto_spectrum(a, side, opts);
}

QuatArray as_array(const Input& input) {
  if (const auto* seq = std::get_if<QuatSequence>(&input)) return QuatArray::from_sequence(*seq);
  return std::get<QuatArray>(input);
}

std::string method_name(SpectrumMethod m) { return m == SpectrumMethod::fft ? "fft" : "naive"; }

std::vector<int> parse_alpha(const std::string& text) {
  std::vector<int> alpha;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch == '+') alpha.push_back(1);
      else if (ch == '-') alpha.push_back(-1);
      else throw UsageError("--alpha takes a string of + and - or a comma list of 1 and -1");
    }
    return alpha;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "1" || tok == "+1" || tok == "+") alpha.push_back(1);
    else if (tok == "-1" || tok == "-") alpha.push_back(-1);
    else throw UsageError("--alpha entries must be 1 or -1");
  }
  return alpha;
}

struct GenerateFlags {
  std::string construction;
  std::optional<int> n;
  std::string alpha;
  std::string first;
  std::string second;
  std::string order = "first-left";
};

Input generate(const GenerateFlags& g, std::istream& in) {
  const auto& name = g.construction;
  if (name == "template") {
    if (g.alpha.empty()) throw UsageError("--construction template needs --alpha");
    return template_sequence(TemplateSpec{parse_alpha(g.alpha)});
  }
  if (!g.alpha.empty()) throw UsageError("--alpha applies only to --construction template");
  if (name == "product") {
    if (g.first.empty() || g.second.empty()) throw UsageError("--construction product needs --first and --second");
    if (g.order != "first-left" && g.order != "first-right") {
      throw UsageError("--order must be first-left or first-right");
    }
    const auto s1 = parse_sequence(read_input(g.first, in));
    const auto s2 = parse_sequence(read_input(g.second, in));
    return coprime_product(s1, s2, g.order == "first-left" ? ProductOrder::first_left : ProductOrder::first_right);
  }
  if (!g.first.empty() || !g.second.empty()) throw UsageError("--first/--second apply only to --construction product");
  if (name == "aop8x8") return construct_aop_array();
  if (!g.n) throw UsageError("--construction " + name + " needs --n");
  auto arr = construct_by_name(name, *g.n);
  if (name == "seq2n") return flatten_row_major(arr);
  return arr;
}

void write_input(std::ostream& out, const Input& value, const std::string& format) {
  if (format == "text") {
    if (const auto* seq = std::get_if<QuatSequence>(&value)) out << serialize_sequence(*seq) << '\n';
    else if (const auto* arr = std::get_if<QuatArray>(&value)) out << serialize_array(*arr) << '\n';
    else out << serialize_float_sequence(std::get<FloatQuatSequence>(value)) << '\n';
    return;
  }
  nlohmann::json rec = {{"record", "sequence"}};
  std::vector<std::string> elems;
  if (const auto* seq = std::get_if<QuatSequence>(&value)) {
    rec["dims"] = {seq->size()};
    for (auto u : *seq) elems.push_back(to_string(u));
  } else if (const auto* arr = std::get_if<QuatArray>(&value)) {
    rec["dims"] = arr->dims();
    for (auto u : arr->elems()) elems.push_back(to_string(u));
  } else {
    const auto& f = std::get<FloatQuatSequence>(value);
    rec["dims"] = {f.size()};
    for (const auto& q : f.elems) elems.push_back(to_string(q));
  }
  rec["elements"] = elems;
  out << rec.dump() << '\n';
}

int verify(const Input& input, const SpectrumFlags& flags, const Common& common, std::ostream& out) {
  const bool text = common.format == "text";
  bool all_perfect = true;
  if (const auto* fseq = std::get_if<FloatQuatSequence>(&input)) {
    if (flags.fft || flags.naive) throw UsageError("--fft/--naive apply only to unit-quaternion input");
    for (auto side : sides_of(flags.side)) {
      const bool perfect = is_perfect(*fseq, side);
      all_perfect = all_perfect && perfect;
      if (text) {
        out << to_string(side) << ": " << (perfect ? "perfect" : "not perfect") << " (float, tolerance "
            << kFloatTolerance << ")\n";
      } else {
        out << nlohmann::json{{"record", "verify"}, {"side", to_string(side)}, {"perfect", perfect},
                              {"method", "float"}, {"size", fseq->size()}}
                   .dump()
            << '\n';
      }
    }
    return all_perfect ? kOk : kNotPerfect;
  }
  const auto arr = as_array(input);
  for (auto side : sides_of(flags.side)) {
    const auto spec = spectrum_of(arr, side, flags, common.jobs);
    all_perfect = all_perfect && spec.perfect;
    std::optional<std::size_t> first_nonzero;
    for (std::size_t n = 1; n < spec.values.size(); ++n) {
      if (!spec.values[n].is_zero()) {
        first_nonzero = n;
        break;
      }
    }
    if (text) {
      out << to_string(side) << ": " << (spec.perfect ? "perfect" : "not perfect") << " (" << method_name(spec.method)
          << ", " << arr.size() << " elements)";
      if (first_nonzero) {
        const auto shift = spec.shift_of(*first_nonzero);
        out << "; first nonzero shift ";
        for (std::size_t a = 0; a < shift.size(); ++a) out << (a ? "," : "") << shift[a];
        out << " : " << to_string(spec.values[*first_nonzero]);
      }
      out << '\n';
    } else {
      nlohmann::json rec = {{"record", "verify"},
                            {"side", to_string(side)},
                            {"perfect", spec.perfect},
                            {"method", method_name(spec.method)},
                            {"dims", spec.dims}};
      if (first_nonzero) {
        const auto& q = spec.values[*first_nonzero];
        rec["first_nonzero"] = {{"shift", spec.shift_of(*first_nonzero)}, {"value", {q.w, q.x, q.y, q.z}}};
      }
      out << rec.dump() << '\n';
    }
  }
  return all_perfect ? kOk : kNotPerfect;
}

void add_format(CLI::App* app, Common& common) {
  app->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
}

void add_jobs(CLI::App* app, Common& common) {
  app->add_option("--jobs", common.jobs, "Worker threads (0 = all cores)");
}

void add_spectrum_flags(CLI::App* app, SpectrumFlags& flags, const std::string& default_side) {
  flags.side = default_side;
  app->add_option("--side", flags.side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  app->add_option("--budget", flags.budget, "Largest size + 1 allowed on the naive path")
      ->check(CLI::PositiveNumber);
  auto* fft = app->add_flag("--fft", flags.fft, "Use the FFT path");
  auto* naive = app->add_flag("--naive", flags.naive, "Use the naive path");
  fft->excludes(naive);
  naive->excludes(fft);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect quaternion sequences: construct, verify, analyse and search", "quatseq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "quatseq 0.1.0");

  Common common;
  SpectrumFlags vflags;
  SpectrumFlags sflags;
  GenerateFlags gflags;
  std::string input_path;

  auto* gen = app.add_subcommand("generate", "Print a construction in canonical text");
  gen->add_option("--construction", gflags.construction, "Construction name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kConstructionNames), std::end(kConstructionNames))));
  gen->add_option("--n", gflags.n, "Size parameter");
  gen->add_option("--alpha", gflags.alpha, "Template signs, e.g. +-+- or 1,-1,1,-1");
  gen->add_option("--first", gflags.first, "First factor (product)");
  gen->add_option("--second", gflags.second, "Second factor (product)");
  gen->add_option("--order", gflags.order, "first-left or first-right (product)");
  gen->add_option("--output,-o", common.output, "Output path");
  add_format(gen, common);

  auto* ver = app.add_subcommand("verify", "Check perfection; exit 0 iff perfect");
  ver->add_option("input", input_path, "Input path, or - for stdin")->required();
  add_spectrum_flags(ver, vflags, "both");
  add_jobs(ver, common);
  add_format(ver, common);

  auto* spec = app.add_subcommand("spectrum", "Print the full autocorrelation table");
  auto* spec_input = spec->add_option("input", input_path, "Input path, or - for stdin");
  auto* spec_cons = spec->add_option("--construction", gflags.construction, "Construction name");
  spec->add_option("--n", gflags.n, "Size parameter");
  spec->add_option("--alpha", gflags.alpha, "Template signs");
  spec_input->excludes(spec_cons);
  spec_cons->excludes(spec_input);
  spec->add_option("--output,-o", common.output, "Output path");
  add_spectrum_flags(spec, sflags, "right");
  add_jobs(spec, common);
  add_format(spec, common);

  auto* search = app.add_subcommand("search", "Search for perfect sequences");
  search->require_subcommand(1);
  std::size_t length = 0;
  std::size_t limit = 0;
  std::string checkpoint;
  std::string resume;
  bool no_prune = false;
  std::string symmetries = "all";
  std::size_t max_length = 12;
  auto add_search_common = [&](CLI::App* sub) {
    sub->add_option("--limit", limit, "Stop after this many hits (0 = no limit)");
    auto* cp = sub->add_option("--checkpoint", checkpoint, "Write a checkpoint file");
    auto* rs = sub->add_option("--resume", resume, "Resume from (and keep updating) a checkpoint file");
    cp->excludes(rs);
    rs->excludes(cp);
    add_jobs(sub, common);
    add_format(sub, common);
  };
  auto* exh = search->add_subcommand("exhaustive", "Branch-and-bound over {±i,±j,±k}^L");
  exh->add_option("--length,-L", length, "Sequence length")->required();
  exh->add_flag("--no-prune", no_prune, "Disable the correlation bound");
  exh->add_option("--symmetries", symmetries, "Comma list, all, or none");
  exh->add_option("--max-length", max_length, "Refuse lengths above this");
  add_search_common(exh);
  auto* tpl = search->add_subcommand("template", "Enumerate the template family");
  tpl->add_option("--length,-L", length, "Sequence length, 2 mod 4")->required();
  add_search_common(tpl);
  AopSearchOptions aop_opts;
  std::vector<std::string> sizes;
  std::string variant = "plain";
  auto* aop = search->add_subcommand("aop", "Random polynomial index-function arrays");
  aop->add_option("--size", sizes, "Array size RxC (repeatable; default all 2..32 with RC > 16)");
  aop->add_option("--samples", aop_opts.samples, "Samples per size");
  aop->add_option("--seed", aop_opts.seed, "RNG seed");
  aop->add_option("--coeff-bound", aop_opts.coeff_bound, "Coefficients in [0, bound)")->check(CLI::PositiveNumber);
  aop->add_option("--max-denominator", aop_opts.max_denominator, "Denominators in [1, max]")
      ->check(CLI::PositiveNumber);
  aop->add_option("--max-degree", aop_opts.max_degree, "Largest exponent per variable")->check(CLI::Range(0, 4));
  aop->add_option("--variant", variant, "plain, cyclic or either")
      ->check(CLI::IsMember({"plain", "cyclic", "either"}));
  add_jobs(aop, common);
  add_format(aop, common);

  auto* cat = app.add_subcommand("catalog", "List or verify the catalog");
  cat->require_subcommand(1);
  std::string catalog_dir;
  auto* cat_list = cat->add_subcommand("list", "List catalog entries");
  auto* cat_verify = cat->add_subcommand("verify", "Verify every catalog entry");
  for (auto* sub : {cat_list, cat_verify}) {
    sub->add_option("--dir", catalog_dir, "Catalog directory");
    add_format(sub, common);
  }
  cat_verify->add_option("--budget", sflags.budget, "Largest size + 1 allowed on the naive path")
      ->check(CLI::PositiveNumber);
  add_jobs(cat_verify, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const bool text = common.format == "text";
    if (gen->parsed()) {
      const auto value = generate(gflags, in);
      Sink sink(common.output, out);
      write_input(sink.stream(), value, common.format);
      return kOk;
    }
    if (ver->parsed()) {
      return verify(parse_input(read_input(input_path, in)), vflags, common, out);
    }
    if (spec->parsed()) {
      Input value;
      if (!gflags.construction.empty()) {
        value = generate(gflags, in);
      } else if (!input_path.empty()) {
        value = parse_input(read_input(input_path, in));
      } else {
        throw UsageError("spectrum needs an input path or --construction");
      }
      if (std::holds_alternative<FloatQuatSequence>(value)) {
        throw UsageError("spectrum supports unit-quaternion input only");
      }
      const auto arr = as_array(value);
      Sink sink(common.output, out);
      for (auto side : sides_of(sflags.side)) {
        write_spectrum(sink.stream(), spectrum_of(arr, side, sflags, common.jobs), parse_output_format(common.format));
      }
      return kOk;
    }
    if (exh->parsed() || tpl->parsed()) {
      CheckpointOptions cp;
      cp.path = resume.empty() ? checkpoint : resume;
      cp.resume = !resume.empty();
      SearchReport report;
      if (exh->parsed()) {
        ExhaustiveOptions opts;
        opts.limit = limit;
        opts.prune = !no_prune;
        opts.symmetries = parse_symmetry_set(symmetries);
        opts.jobs = common.jobs;
        opts.max_length = max_length;
        opts.checkpoint = cp;
        report = exhaustive_search(length, opts);
      } else {
        TemplateSearchOptions opts;
        opts.limit = limit;
        opts.jobs = common.jobs;
        opts.checkpoint = cp;
        report = template_search(length, opts);
      }
      write_search_report(out, report, parse_output_format(common.format));
      return kOk;
    }
    if (aop->parsed()) {
      std::vector<std::pair<std::size_t, std::size_t>> dims;
      for (const auto& s : sizes) {
        std::vector<std::size_t> d;
        try {
          d = parse_dims(s);
        } catch (const ParseError&) {
        }
        if (d.size() != 2) throw UsageError("--size takes RxC, got '" + s + "'");
        dims.emplace_back(d[0], d[1]);
      }
      if (dims.empty()) dims = default_aop_sizes();
      aop_opts.variant = parse_aop_variant(variant);
      aop_opts.jobs = common.jobs;
      write_search_report(out, aop_random_search(dims, aop_opts), parse_output_format(common.format));
      return kOk;
    }
    if (cat_list->parsed() || cat_verify->parsed()) {
      const auto dir = catalog_dir.empty() ? default_catalog_dir() : std::filesystem::path(catalog_dir);
      const auto entries = load_catalog(dir);
      if (cat_list->parsed()) {
        for (const auto& e : entries) {
          std::string kind;
          std::string dims;
          if (const auto* s = std::get_if<QuatSequence>(&e.payload)) {
            kind = "sequence";
            dims = std::to_string(s->size());
          } else if (const auto* a = std::get_if<QuatArray>(&e.payload)) {
            kind = "array";
            dims = format_dims(a->dims());
          } else {
            kind = "float-sequence";
            dims = std::to_string(std::get<FloatQuatSequence>(e.payload).size());
          }
          if (text) {
            out << e.id << "  " << kind << "  " << dims << "  " << e.source << '\n';
          } else {
            out << nlohmann::json{{"record", "entry"}, {"id", e.id}, {"kind", kind}, {"dims", dims},
                                  {"source", e.source}}
                       .dump()
                << '\n';
          }
        }
        return kOk;
      }
      SpectrumOptions opts;
      opts.naive_budget = sflags.budget;
      opts.jobs = common.jobs;
      const auto result = verify_catalog(entries, opts);
      for (const auto& v : result.entries) {
        if (text) {
          out << (v.passed ? "PASS " : "FAIL ") << v.id << "  " << v.summary << '\n';
          for (const auto& f : v.failures) out << "  " << f << '\n';
        } else {
          out << nlohmann::json{{"record", "catalog-verify"}, {"id", v.id}, {"passed", v.passed},
                                {"summary", v.summary}, {"failures", v.failures}}
                     .dump()
              << '\n';
        }
      }
      return result.all_passed() ? kOk : kNotPerfect;
    }
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "; rerun with --fft or a larger --budget\n";
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace quatseq::cli
