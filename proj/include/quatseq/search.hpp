#pragma once

// Searches for perfect sequences: exhaustive branch-and-bound over
// {±i, ±j, ±k}^L, enumeration of the [-i, s, k, s_r] template family, and a
// randomized search over polynomial index-function arrays (aop_search.hpp).
//
// The candidate space of every search is split into contiguous ranges that
// workers claim in order. Results merge in range order, so a report does not
// depend on the number of jobs. A checkpoint file records the merged prefix
// of ranges and lets an interrupted search resume.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatseq/aop_search.hpp"
#include "quatseq/constructions.hpp"
#include "quatseq/sequence.hpp"
#include "quatseq/symmetry.hpp"

namespace quatseq {

struct SearchHit {
  QuatSequence sequence;
  std::optional<TemplateSpec> alpha;
  std::optional<PolynomialIndexSpec> index_spec;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchReport {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::uint64_t candidates = 0;
  std::vector<SearchHit> hits;
  double wall_seconds = 0.0;
  /// False when the search stopped early at the hit limit.
  bool exhausted = true;

  /// Equality on everything except wall time.
  bool same_results(const SearchReport& other) const;
};

struct CheckpointOptions {
  /// Written after every merged range when non-empty.
  std::string path;
  /// Load `path` first (if it exists) and continue from its cursor.
  bool resume = false;
};

struct ExhaustiveOptions {
  /// Stop after this many distinct hits; 0 means no limit.
  std::size_t limit = 0;
  bool prune = true;
  SymmetrySet symmetries = default_symmetries();
  unsigned jobs = 1;
  std::size_t max_length = 12;
  CheckpointOptions checkpoint;
};

/// Perfect sequences of length L over {±i, ±j, ±k}. With symmetries enabled
/// the hits are canonical forms (see canonical_form) and, when automorphisms
/// are among them, the first element is fixed to i. Throws
/// std::invalid_argument for odd L or L above max_length.
SearchReport exhaustive_search(std::size_t length, const ExhaustiveOptions& opts = {});

struct TemplateSearchOptions {
  std::size_t limit = 0;
  unsigned jobs = 1;
  CheckpointOptions checkpoint;
};

/// All 2^((L-2)/2) sign vectors of the template family. Requires L ≡ 2 (mod 4).
SearchReport template_search(std::size_t length, const TemplateSearchOptions& opts = {});

/// Sign vector for enumeration index `index` of an m-sign template: the most
/// significant of the m bits is alpha_0, a set bit means -1.
TemplateSpec template_alpha_from_index(std::uint64_t index, std::size_t m);

/// Checkpoint file text. Hits are stored in canonical sequence text.
std::string serialize_checkpoint(const SearchReport& report, std::size_t range_count,
                                 std::size_t cursor);

struct Checkpoint {
  SearchReport report;
  std::size_t range_count = 0;
  std::size_t cursor = 0;
};

/// Throws ParseError on malformed text.
Checkpoint parse_checkpoint(const std::string& text);

}  // namespace quatseq
