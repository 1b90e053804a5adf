// SPDX-License-Identifier: Apache-2.0
//
// Lemma mining: classify candidate lemmas against a design, order the
// useful ones deterministically, and search prefixes of that order for an
// inductive strengthening of a target property.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inductor/candidates.hpp"
#include "inductor/checker.hpp"
#include "inductor/frontend.hpp"

namespace inductor {

// Verdict classes for a candidate lemma. Inductive and HoldsToBound
// candidates enter the strengthening search; the rest are kept only for
// reporting and feedback.
enum class LemmaStatus {
  Inductive,      // k-inductive on its own
  HoldsToBound,   // no counterexample up to the BMC bound, not k-inductive
  Falsified,      // concrete counterexample found
  IllFormed,      // did not parse or compile
  Unknown,        // solver timed out before any of the above was established
};

std::string to_string(LemmaStatus status);

// A candidate lemma together with everything classification learned about
// it. IllFormed lemmas carry the parse/compile error in `diagnostics` and
// no parsed or compiled form.
struct ClassifiedLemma {
  Candidate candidate;                       // original text + provenance
  std::string normalized;                    // dedup/sort key
  LemmaStatus status = LemmaStatus::Unknown;
  std::string diagnostics;                   // parse error or verdict detail
  std::optional<PropRef> parsed;             // absent iff IllFormed
  std::optional<CompiledProperty> compiled;  // absent iff IllFormed
  // HoldsToBound: the exhausted bound. Falsified: counterexample depth.
  // Otherwise -1.
  int bound = -1;
};

// Classifies one candidate. Arbitrary text is tolerated: every failure mode
// becomes a status, never an exception (only a malformed budget throws
// ConfigError). Named references in the text resolve against the design's
// declared properties. When the induction step times out but bounded
// checking completes, the lemma counts as HoldsToBound; Unknown is reserved
// for candidates where the bounded check timed out as well.
ClassifiedLemma classify(const ElaboratedDesign& design,
                         const Candidate& candidate, const CheckBudget& budget,
                         const SolverConfig& config = {});
ClassifiedLemma classify(const ElaboratedDesign& design,
                         const std::string& text, const CheckBudget& budget,
                         const SolverConfig& config = {});

struct ClassifyOptions {
  bool parallel = true;  // classify candidates across threads
  int workers = 0;       // 0 = one per available core
};

// Classifies every candidate in the set; result order matches input order.
// Candidates are independent, so the parallel path distributes them across
// threads (each check owns its solver); classify_all_serial is the plain
// loop the parallel path is tested against.
std::vector<ClassifiedLemma> classify_all(const ElaboratedDesign& design,
                                          const CandidateSet& candidates,
                                          const CheckBudget& budget,
                                          const SolverConfig& config = {},
                                          const ClassifyOptions& opts = {});
std::vector<ClassifiedLemma> classify_all_serial(
    const ElaboratedDesign& design, const CandidateSet& candidates,
    const CheckBudget& budget, const SolverConfig& config = {});

// Deterministic search order: Inductive lemmas before HoldsToBound ones,
// ties broken by byte-wise comparison of the normalized text. Falsified,
// IllFormed and Unknown lemmas are excluded; duplicates (same normalized
// text) keep their first occurrence.
std::vector<ClassifiedLemma> order_candidates(
    const std::vector<ClassifiedLemma>& classified);

// One entry of the strengthening-check log: which lemma subset was checked
// alongside the property, and the verdict.
struct CertificateEntry {
  std::string kind;                 // "single" or "prefix"
  std::vector<std::string> lemmas;  // normalized texts, in checked order
  StrengtheningStatus verdict = StrengtheningStatus::Unknown;
};

struct StrengtheningStats {
  int total = 0;  // candidates classified
  int inductive = 0;
  int holds_to_bound = 0;
  int falsified = 0;
  int ill_formed = 0;
  int unknown = 0;
  int strengthening_checks = 0;  // check_strengthening invocations
  int timeouts = 0;              // Unknown outcomes, classification + checks
};

// Outcome of a mining run. `subset` is the returned strengthening L, in
// checked order; `certificate` logs every strengthening check performed.
// `classified` holds every candidate's classification, sorted by normalized
// text so that identical candidate multisets serialize identically.
struct StrengtheningResult {
  bool certified = false;
  std::string route;  // "single", "prefix" or "none"
  std::vector<ClassifiedLemma> subset;
  std::vector<CertificateEntry> certificate;
  StrengtheningStats stats;
  std::vector<ClassifiedLemma> classified;
};

std::string to_json(const StrengtheningResult& result);

struct MineOptions {
  ClassifyOptions classify;
};

// Mines `candidates` for an inductive strengthening of `prop`:
//   1. classify everything;
//   2. for each Inductive candidate in sorted order, test whether it
//      certifies the property on its own — first hit wins;
//   3. otherwise test prefixes of length 0, 1, …, m of the sorted list,
//      returning the first certified prefix;
//   4. otherwise return an uncertified result with an empty subset.
// The caller is expected to have checked `prop` is not itself falsified.
// Timeouts never abort the search; they surface in stats and the log.
StrengtheningResult lemma_mine(const ElaboratedDesign& design,
                               const PropRef& prop,
                               const CandidateSet& candidates,
                               const CheckBudget& budget,
                               const SolverConfig& config = {},
                               const MineOptions& opts = {});

}  // namespace inductor
