#pragma once

// Catalog of known sequences and arrays, one entry per file:
//
//   id: seq2n-L128
//   source: ...
//   dims: 8 x 8            (arrays only)
//   alphabet: float        (non-unit entries only)
//   expect: not-perfect odd-perfect zcz=7 value@8=16
//   <body in canonical text form>
//
// Expectation tokens: perfect, not-perfect, odd-perfect, zcz=N, value@τ=q
// (q a Lipschitz quaternion, right correlation).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "quatseq/correlation.hpp"
#include "quatseq/quaternion.hpp"
#include "quatseq/sequence.hpp"
#include "quatseq/text_format.hpp"

namespace quatseq {

struct Expectation {
  std::optional<bool> perfect;
  bool odd_perfect = false;
  std::optional<std::size_t> zcz;
  std::vector<std::pair<std::int64_t, LipschitzQuat>> values;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

using CatalogPayload = std::variant<QuatSequence, QuatArray, FloatQuatSequence>;

struct CatalogEntry {
  std::string id;
  std::string source;
  CatalogPayload payload;
  Expectation expect;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Throws ParseError.
CatalogEntry parse_entry(std::string_view text);
std::string serialize_entry(const CatalogEntry& entry);

/// Throws std::runtime_error on I/O failure and ParseError on bad content.
CatalogEntry load_entry(const std::filesystem::path& path);
/// Every *.qseq / *.qarr file in dir, sorted by id.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);
/// $QUATSEQ_CATALOG if set, else the catalog shipped with the sources.
std::filesystem::path default_catalog_dir();

struct EntryVerification {
  std::string id;
  bool passed = true;
  std::vector<std::string> failures;
  /// e.g. "perfect (left and right), naive".
  std::string summary;
};

struct CatalogVerification {
  std::vector<EntryVerification> entries;

  bool all_passed() const;
};

EntryVerification verify_entry(const CatalogEntry& entry, const SpectrumOptions& opts = {});
CatalogVerification verify_catalog(const std::vector<CatalogEntry>& entries,
                                   const SpectrumOptions& opts = {});

}  // namespace quatseq
