// SPDX-License-Identifier: Apache-2.0
//
// Few-shot prompt construction over a pool of worked examples, and the two
// mining drivers: a one-shot sampler that aggregates n independent
// responses, and a conversational driver that feeds per-lemma verdicts back
// to the generator between rounds.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inductor/checker.hpp"
#include "inductor/generators.hpp"
#include "inductor/lemma_mine.hpp"
#include "json.hpp"

namespace inductor {

// A mining target: one design and one property to prove on it. The
// property text may be a bare expression, a full property block, or the
// name of a property declared in the design.
struct MiningTask {
  std::string name;
  std::string design_text;
  std::string property_text;
};

// --- Embeddings -------------------------------------------------------------

// Optional external embedding source; failures (ProviderError) make the
// caller fall back to the built-in embedding.
class EmbeddingProvider {
public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<double> embed(const std::string& text) = 0;
};

// Built-in embedding: token-frequency vector over a fixed vocabulary of
// HDL keywords and operators plus hash buckets for identifiers,
// L2-normalized. Empty or token-free text gives the zero vector. With a
// provider, its vector is used instead unless it throws ProviderError, in
// which case the fallback is used and a note is appended to `warnings`.
std::vector<double> embed(const std::string& text);
std::vector<double> embed(const std::string& text, EmbeddingProvider* provider,
                          std::vector<std::string>* warnings = nullptr);

// Dot product over vectors of equal dimension (embeddings are normalized,
// so this is cosine similarity).
double dot(const std::vector<double>& a, const std::vector<double>& b);

// --- The example pool -------------------------------------------------------

// One worked example: a design, a property, a certified strengthening and
// the prose argument for it.
struct CotExample {
  std::string id;  // pool-entry directory name; the deterministic tiebreak
  std::string design_text;
  std::string property_text;
  std::vector<std::string> lemmas;
  std::string reasoning;
};

// Loads a pool directory (one subdirectory per example containing
// design.sv, property.txt, lemmas.txt and reasoning.txt), sorted by id.
// Every entry's lemmas are certified against its own design at load time;
// an entry that fails to parse, elaborate or certify throws ConfigError.
std::vector<CotExample> load_cot_pool(const std::string& dir,
                                      const CheckBudget& budget,
                                      const SolverConfig& config = {});

// The k pool entries most similar to the task (dot product of embeddings,
// ties broken by id ascending). Throws PoolTooSmall when the pool has
// fewer than k entries. Provider-fallback notes land in `warnings`.
std::vector<CotExample> select_examples(
    const MiningTask& task, const std::vector<CotExample>& pool, int k,
    EmbeddingProvider* provider = nullptr,
    std::vector<std::string>* warnings = nullptr);

// --- Prompts ----------------------------------------------------------------

// A rendered few-shot prompt: the fixed template with the selected
// examples and the target substituted in. The text is built once per run
// and stays constant across samples.
struct FewShotPrompt {
  std::string text;
  std::vector<std::string> example_ids;  // which pool entries were used
};

// Substitutes {{examples}}, {{design}} and {{property}} in the template.
// Throws ConfigError when the template lacks one of the placeholders or
// the pool is too small for k.
FewShotPrompt build_prompt(const MiningTask& task,
                           const std::vector<CotExample>& pool, int k,
                           const std::string& template_text,
                           EmbeddingProvider* provider = nullptr,
                           std::vector<std::string>* warnings = nullptr);

// Feedback for a failed round: states that the candidates do not include
// an inductive strengthening and lists one verdict line per lemma, in the
// given order, without counterexample traces. On even-numbered rounds the
// reminder text is appended.
std::string generate_repair_msg(const std::vector<ClassifiedLemma>& classified,
                                int round, const std::string& reminder_text);

// --- Run drivers ------------------------------------------------------------

// Everything a run needs besides the task and the generator.
struct PromptingSetup {
  std::string template_text;
  std::string reminder_text;
  std::vector<CotExample> pool;
  int fewshot_k = 1;
  nlohmann::json sampling = nlohmann::json::object();
  EmbeddingProvider* embeddings = nullptr;
  ClassifyOptions classify;
};

// Receives one JSON record per run event (run_start, prompt, sample,
// mined, feedback, run_end). Records carry no timestamps, so a scripted
// run logs identical bytes every time.
class RunObserver {
public:
  virtual ~RunObserver() = default;
  virtual void event(const nlohmann::json& record) = 0;
};

// Writes each event as one JSON line.
class JsonlObserver : public RunObserver {
public:
  explicit JsonlObserver(std::ostream& out) : out_(out) {}
  void event(const nlohmann::json& record) override;

private:
  std::ostream& out_;
};

struct RunCounters {
  int total_lemmas = 0;   // distinct candidates seen across the run
  int correct = 0;        // classified Inductive or HoldsToBound
  int one_inductive = 0;  // classified Inductive
  bool solved = false;    // the run produced a certified strengthening
};

struct RunOutcome {
  StrengtheningResult result;        // the final mining result
  std::vector<CandidateSet> rounds;  // candidates per sample/round
  RunCounters counters;
  int rounds_used = 0;
  bool aborted = false;        // a generator error cut the run short
  std::string abort_reason;    // empty unless aborted
  std::vector<std::string> warnings;
};

std::string to_json(const RunOutcome& outcome);

// One-shot driver: builds the prompt once, draws n independent samples
// (1 <= n <= 5), aggregates every candidate into a single set and mines it
// exactly once. Generator errors abort the run but keep the counters over
// whatever was collected.
RunOutcome run_non_agentic(const MiningTask& task, Generator& generator,
                           const PromptingSetup& setup, int n,
                           const CheckBudget& budget,
                           const SolverConfig& config = {},
                           RunObserver* observer = nullptr);

// Conversational driver, at most n rounds (1 <= n <= 5). Each round draws
// one sample, mines the fresh candidates, then the union of all rounds;
// on failure it appends a repair message (with the reminder every second
// round) and continues. Returns on the first certified result.
RunOutcome run_agentic(const MiningTask& task, Generator& generator,
                       const PromptingSetup& setup, int n,
                       const CheckBudget& budget,
                       const SolverConfig& config = {},
                       RunObserver* observer = nullptr);

}  // namespace inductor
