// SPDX-License-Identifier: Apache-2.0
//
// Candidate lemma collections exchanged between generators and the miner.

#pragma once

#include <string>
#include <vector>

namespace inductor {

// One candidate lemma as text, with provenance.
struct Candidate {
  std::string source;  // lemma text as produced by the generator
  std::string origin;  // generator id
  int round = 0;       // conversation round that produced it (0 = first)

  bool operator==(const Candidate&) const = default;
};

// Canonical comparison/deduplication key for lemma text: non-ASCII operator
// glyphs are repaired, a `property <name>; ... endproperty` wrapper is
// stripped, whitespace runs collapse to single spaces, and a trailing
// semicolon is dropped. The result is empty iff the text carries no content.
std::string normalize_lemma(const std::string& text);

// Deduplicated candidate list in first-seen order, plus the verbatim
// generator outputs they were extracted from and any fragments that could
// not be understood. Two candidates are duplicates when their normalized
// texts match; empty-after-normalization texts are dropped.
struct CandidateSet {
  std::vector<Candidate> lemmas;
  std::vector<std::string> raw_responses;
  std::vector<std::string> diagnostics;

  // Adds one candidate, returning true when it was new.
  bool add(Candidate candidate);
  // Set union: appends the other set's lemmas (dedup preserved), raw
  // responses and diagnostics.
  void merge(const CandidateSet& other);
  bool contains(const std::string& text) const;
};

// The candidate exchange format: a JSON array of
// {"source": ..., "origin": ..., "round": ...} objects.
std::string candidates_to_json(const CandidateSet& set);
CandidateSet candidates_from_json(const std::string& json);

}  // namespace inductor
