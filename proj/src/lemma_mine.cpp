// SPDX-License-Identifier: Apache-2.0

#include "inductor/lemma_mine.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace inductor {

std::string to_string(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::Inductive: return "inductive";
    case LemmaStatus::HoldsToBound: return "holds-to-bound";
    case LemmaStatus::Falsified: return "falsified";
    case LemmaStatus::IllFormed: return "ill-formed";
    case LemmaStatus::Unknown: return "unknown";
  }
  return "unknown";
}

ClassifiedLemma classify(const ElaboratedDesign& design,
                         const Candidate& candidate, const CheckBudget& budget,
                         const SolverConfig& config) {
  validate(budget);
  ClassifiedLemma out;
  out.candidate = candidate;
  out.normalized = normalize_lemma(candidate.source);
  if (out.normalized.empty()) {
    out.status = LemmaStatus::IllFormed;
    out.diagnostics = "empty lemma text";
    return out;
  }
  try {
    out.parsed = parse_property(candidate.source, &design.properties);
    out.compiled = compile_property(*out.parsed, design);
  } catch (const Error& e) {
    out.parsed.reset();
    out.compiled.reset();
    out.status = LemmaStatus::IllFormed;
    out.diagnostics = e.what();
    return out;
  }

  CheckVerdict verdict = kinduction(*out.compiled, budget, config);
  bool step_timed_out = false;
  if (verdict.status == CheckStatus::Unknown) {
    // The induction step ran out of time; the lemma can still be placed in
    // the holds-to-bound class if bounded checking completes in time.
    step_timed_out = true;
    CheckVerdict bounded = bmc(*out.compiled, budget, config);
    if (bounded.status != CheckStatus::Unknown) verdict = std::move(bounded);
  }

  switch (verdict.status) {
    case CheckStatus::Inductive:
      out.status = LemmaStatus::Inductive;
      out.diagnostics = std::to_string(budget.k) + "-inductive";
      break;
    case CheckStatus::HoldsToBound:
      out.status = LemmaStatus::HoldsToBound;
      out.bound = verdict.bound;
      out.diagnostics =
          "holds to bound " + std::to_string(verdict.bound) +
          (step_timed_out
               ? ", induction step timed out"
               : ", not " + std::to_string(budget.k) + "-inductive");
      break;
    case CheckStatus::Falsified:
      out.status = LemmaStatus::Falsified;
      out.bound = verdict.trace ? verdict.trace->depth() : 0;
      out.diagnostics =
          "counterexample at depth " + std::to_string(out.bound);
      break;
    case CheckStatus::Unknown:
      out.status = LemmaStatus::Unknown;
      out.diagnostics = "timeout";
      break;
  }
  return out;
}

ClassifiedLemma classify(const ElaboratedDesign& design,
                         const std::string& text, const CheckBudget& budget,
                         const SolverConfig& config) {
  return classify(design, Candidate{text, "", 0}, budget, config);
}

std::vector<ClassifiedLemma> classify_all_serial(
    const ElaboratedDesign& design, const CandidateSet& candidates,
    const CheckBudget& budget, const SolverConfig& config) {
  validate(budget);
  std::vector<ClassifiedLemma> out;
  out.reserve(candidates.lemmas.size());
  for (const Candidate& c : candidates.lemmas) {
    out.push_back(classify(design, c, budget, config));
  }
  return out;
}

std::vector<ClassifiedLemma> classify_all(const ElaboratedDesign& design,
                                          const CandidateSet& candidates,
                                          const CheckBudget& budget,
                                          const SolverConfig& config,
                                          const ClassifyOptions& opts) {
  validate(budget);
  if (!opts.parallel) {
    return classify_all_serial(design, candidates, budget, config);
  }
  const int n = static_cast<int>(candidates.lemmas.size());
  std::vector<ClassifiedLemma> out(static_cast<size_t>(n));
#ifdef _OPENMP
  int workers = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)] =
        classify(design, candidates.lemmas[static_cast<size_t>(i)], budget,
                 config);
  }
  return out;
}

std::vector<ClassifiedLemma> order_candidates(
    const std::vector<ClassifiedLemma>& classified) {
  std::vector<ClassifiedLemma> out;
  std::set<std::string> seen;
  for (const ClassifiedLemma& c : classified) {
    if (c.status != LemmaStatus::Inductive &&
        c.status != LemmaStatus::HoldsToBound) {
      continue;
    }
    if (!seen.insert(c.normalized).second) continue;
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ClassifiedLemma& a, const ClassifiedLemma& b) {
                     if (a.status != b.status) {
                       return a.status == LemmaStatus::Inductive;
                     }
                     return a.normalized < b.normalized;
                   });
  return out;
}

namespace {

void tally(StrengtheningStats& stats,
           const std::vector<ClassifiedLemma>& classified) {
  stats.total = static_cast<int>(classified.size());
  for (const ClassifiedLemma& c : classified) {
    switch (c.status) {
      case LemmaStatus::Inductive: ++stats.inductive; break;
      case LemmaStatus::HoldsToBound: ++stats.holds_to_bound; break;
      case LemmaStatus::Falsified: ++stats.falsified; break;
      case LemmaStatus::IllFormed: ++stats.ill_formed; break;
      case LemmaStatus::Unknown:
        ++stats.unknown;
        ++stats.timeouts;
        break;
    }
  }
}

}  // namespace

StrengtheningResult lemma_mine(const ElaboratedDesign& design,
                               const PropRef& prop,
                               const CandidateSet& candidates,
                               const CheckBudget& budget,
                               const SolverConfig& config,
                               const MineOptions& opts) {
  validate(budget);
  StrengtheningResult r;
  r.classified = classify_all(design, candidates, budget, config,
                              opts.classify);
  tally(r.stats, r.classified);
  std::vector<ClassifiedLemma> ordered = order_candidates(r.classified);
  // The classification list is reported sorted by text so that the same
  // candidate multiset always serializes to the same bytes.
  std::sort(r.classified.begin(), r.classified.end(),
            [](const ClassifiedLemma& a, const ClassifiedLemma& b) {
              return a.normalized < b.normalized;
            });

  auto check_subset =
      [&](const std::string& kind,
          const std::vector<const ClassifiedLemma*>& subset)
      -> StrengtheningStatus {
    std::vector<PropRef> lemmas;
    CertificateEntry entry;
    entry.kind = kind;
    for (const ClassifiedLemma* c : subset) {
      lemmas.push_back(*c->parsed);
      entry.lemmas.push_back(c->normalized);
    }
    entry.verdict = check_strengthening(design, prop, lemmas, budget, config);
    ++r.stats.strengthening_checks;
    if (entry.verdict == StrengtheningStatus::Unknown) ++r.stats.timeouts;
    r.certificate.push_back(std::move(entry));
    return r.certificate.back().verdict;
  };

  // An inductive candidate that certifies the property on its own ends the
  // search immediately; candidates are tried in sorted order.
  for (const ClassifiedLemma& c : ordered) {
    if (c.status != LemmaStatus::Inductive) break;  // sorted: Inductive first
    if (check_subset("single", {&c}) == StrengtheningStatus::Certified) {
      r.subset = {c};
      r.certified = true;
      r.route = "single";
      return r;
    }
  }

  // Prefixes of length 0, 1, ..., m of the sorted list. Length 0 is the
  // property alone, which covers properties that need no strengthening.
  for (size_t p = 0; p <= ordered.size(); ++p) {
    std::vector<const ClassifiedLemma*> prefix;
    for (size_t i = 0; i < p; ++i) prefix.push_back(&ordered[i]);
    if (check_subset("prefix", prefix) == StrengtheningStatus::Certified) {
      r.subset.assign(ordered.begin(), ordered.begin() + p);
      r.certified = true;
      r.route = "prefix";
      return r;
    }
  }

  r.route = "none";
  return r;
}

namespace {

nlohmann::json lemma_to_json(const ClassifiedLemma& c) {
  return {{"text", c.normalized},
          {"source", c.candidate.source},
          {"origin", c.candidate.origin},
          {"round", c.candidate.round},
          {"status", to_string(c.status)},
          {"bound", c.bound},
          {"diagnostics", c.diagnostics}};
}

}  // namespace

std::string to_json(const StrengtheningResult& result) {
  nlohmann::json j;
  j["certified"] = result.certified;
  j["route"] = result.route;
  j["subset"] = nlohmann::json::array();
  for (const ClassifiedLemma& c : result.subset) {
    j["subset"].push_back(lemma_to_json(c));
  }
  j["certificate"] = nlohmann::json::array();
  for (const CertificateEntry& e : result.certificate) {
    j["certificate"].push_back({{"kind", e.kind},
                                {"lemmas", e.lemmas},
                                {"verdict", to_string(e.verdict)}});
  }
  j["stats"] = {{"total", result.stats.total},
                {"inductive", result.stats.inductive},
                {"holds_to_bound", result.stats.holds_to_bound},
                {"falsified", result.stats.falsified},
                {"ill_formed", result.stats.ill_formed},
                {"unknown", result.stats.unknown},
                {"strengthening_checks", result.stats.strengthening_checks},
                {"timeouts", result.stats.timeouts}};
  j["classified"] = nlohmann::json::array();
  for (const ClassifiedLemma& c : result.classified) {
    j["classified"].push_back(lemma_to_json(c));
  }
  return j.dump(2);
}

}  // namespace inductor
