#pragma once

// Output formats for spectra and search reports.
//
// text:        a header line followed by one "shift : value" line per shift,
//                dims: 128; side: right; perfect: false; zcz: 7; method: naive
//                0 : 128
//                1 : 0
// structured:  JSON lines; one header object, then one object per shift
//              (spectra) or per hit (search reports).

#include <ostream>
#include <string>

#include "quatseq/correlation.hpp"
#include "quatseq/search.hpp"

namespace quatseq {

enum class OutputFormat { text, structured };

OutputFormat parse_output_format(const std::string& text);

std::string spectrum_header(const CorrelationSpectrum& spectrum);
void write_spectrum(std::ostream& out, const CorrelationSpectrum& spectrum, OutputFormat format);

void write_search_report(std::ostream& out, const SearchReport& report, OutputFormat format);

}  // namespace quatseq
