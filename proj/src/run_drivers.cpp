// SPDX-License-Identifier: Apache-2.0
//
// The two mining drivers. Both build the few-shot prompt once, so every
// sample of a run sees byte-identical context; they differ in what happens
// after a sample: the one-shot driver only aggregates, the conversational
// driver mines every round and feeds verdicts back into the dialogue.

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "inductor/diagnostics.hpp"
#include "inductor/frontend.hpp"
#include "inductor/prompting.hpp"

namespace inductor {

namespace {

struct TaskContext {
  ElaboratedDesign design;
  PropRef prop;
};

TaskContext parse_task(const MiningTask& task) {
  TaskContext ctx{elaborate(parse_design(task.design_text)), {}};
  ctx.prop = parse_property(task.property_text, &ctx.design.properties);
  return ctx;
}

void check_round_count(int n) {
  if (n < 1 || n > 5) {
    throw ConfigError("sample/round count must be between 1 and 5");
  }
}

void emit(RunObserver* observer, nlohmann::json record) {
  if (observer != nullptr) observer->event(std::move(record));
}

nlohmann::json counters_json(const RunCounters& c) {
  return {{"total_lemmas", c.total_lemmas},
          {"correct", c.correct},
          {"one_inductive", c.one_inductive},
          {"solved", c.solved}};
}

nlohmann::json lemma_texts(const CandidateSet& set) {
  nlohmann::json texts = nlohmann::json::array();
  for (const Candidate& c : set.lemmas) texts.push_back(c.source);
  return texts;
}

nlohmann::json subset_texts(const StrengtheningResult& result) {
  nlohmann::json texts = nlohmann::json::array();
  for (const ClassifiedLemma& cl : result.subset) texts.push_back(cl.normalized);
  return texts;
}

nlohmann::json mined_event(int round, const std::string& scope,
                           const StrengtheningResult& result) {
  return {{"event", "mined"},
          {"round", round},
          {"scope", scope},
          {"certified", result.certified},
          {"route", result.route},
          {"subset", subset_texts(result)}};
}

// Accumulates the first classification seen for each distinct lemma, so
// run counters cover every candidate of the run even when the final mining
// call only saw the last round.
using ClassificationMap = std::map<std::string, LemmaStatus>;

void record_classifications(ClassificationMap& seen,
                            const std::vector<ClassifiedLemma>& classified) {
  for (const ClassifiedLemma& cl : classified) {
    seen.emplace(cl.normalized, cl.status);
  }
}

RunCounters tally(const ClassificationMap& seen, bool solved) {
  RunCounters c;
  c.total_lemmas = static_cast<int>(seen.size());
  for (const auto& [text, status] : seen) {
    if (status == LemmaStatus::Inductive) ++c.one_inductive;
    if (status == LemmaStatus::Inductive ||
        status == LemmaStatus::HoldsToBound) {
      ++c.correct;
    }
  }
  c.solved = solved;
  return c;
}

// The per-round classification in the order the candidates appeared in the
// response, which is the order the feedback lists them in.
std::vector<ClassifiedLemma> in_candidate_order(
    const CandidateSet& candidates,
    const std::vector<ClassifiedLemma>& classified) {
  std::map<std::string, const ClassifiedLemma*> by_text;
  for (const ClassifiedLemma& cl : classified) {
    by_text.emplace(cl.normalized, &cl);
  }
  std::vector<ClassifiedLemma> ordered;
  for (const Candidate& c : candidates.lemmas) {
    auto it = by_text.find(normalize_lemma(c.source));
    if (it != by_text.end()) ordered.push_back(*it->second);
  }
  return ordered;
}

}  // namespace

void JsonlObserver::event(const nlohmann::json& record) {
  out_ << record.dump() << "\n";
}

std::string to_json(const RunOutcome& outcome) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const CandidateSet& set : outcome.rounds) {
    rounds.push_back(
        {{"lemmas", nlohmann::json::parse(candidates_to_json(set))},
         {"diagnostics", set.diagnostics}});
  }
  nlohmann::json j{
      {"aborted", outcome.aborted},
      {"abort_reason", outcome.abort_reason},
      {"rounds_used", outcome.rounds_used},
      {"counters", counters_json(outcome.counters)},
      {"rounds", std::move(rounds)},
      {"result", nlohmann::json::parse(to_json(outcome.result))},
      {"warnings", outcome.warnings},
  };
  return j.dump(2);
}

RunOutcome run_non_agentic(const MiningTask& task, Generator& generator,
                           const PromptingSetup& setup, int n,
                           const CheckBudget& budget,
                           const SolverConfig& config, RunObserver* observer) {
  validate(budget);
  check_round_count(n);
  TaskContext ctx = parse_task(task);

  RunOutcome out;
  FewShotPrompt prompt =
      build_prompt(task, setup.pool, setup.fewshot_k, setup.template_text,
                   setup.embeddings, &out.warnings);
  emit(observer, {{"event", "run_start"},
                  {"mode", "non-agentic"},
                  {"task", task.name},
                  {"fewshot", setup.fewshot_k},
                  {"samples", n},
                  {"examples", prompt.example_ids}});
  for (const std::string& w : out.warnings) {
    emit(observer, {{"event", "warning"}, {"text", w}});
  }
  emit(observer, {{"event", "prompt"}, {"text", prompt.text}});

  // Every sample reuses this request object verbatim.
  GeneratorRequest request;
  request.messages = {{"user", prompt.text}};
  request.sampling = setup.sampling;

  CandidateSet all;
  for (int i = 1; i <= n; ++i) {
    std::string response;
    try {
      response = generator.generate(request);
    } catch (const Error& e) {
      out.aborted = true;
      out.abort_reason = e.what();
      emit(observer,
           {{"event", "abort"}, {"sample", i}, {"reason", out.abort_reason}});
      break;
    }
    out.rounds_used = i;
    CandidateSet sample = parse_response(response, generator.id(), i);
    emit(observer, {{"event", "sample"},
                    {"round", i},
                    {"response", response},
                    {"lemmas", lemma_texts(sample)}});
    all.merge(sample);
    out.rounds.push_back(std::move(sample));
  }

  // One mining call over the union, even for a cut-short run: the counters
  // then still cover everything that was collected.
  MineOptions mine_opts;
  mine_opts.classify = setup.classify;
  out.result = lemma_mine(ctx.design, ctx.prop, all, budget, config, mine_opts);
  emit(observer, mined_event(out.rounds_used, "union", out.result));

  ClassificationMap seen;
  record_classifications(seen, out.result.classified);
  out.counters = tally(seen, out.result.certified);
  emit(observer, {{"event", "run_end"},
                  {"counters", counters_json(out.counters)},
                  {"aborted", out.aborted}});
  return out;
}

RunOutcome run_agentic(const MiningTask& task, Generator& generator,
                       const PromptingSetup& setup, int n,
                       const CheckBudget& budget, const SolverConfig& config,
                       RunObserver* observer) {
  validate(budget);
  check_round_count(n);
  TaskContext ctx = parse_task(task);

  RunOutcome out;
  FewShotPrompt prompt =
      build_prompt(task, setup.pool, setup.fewshot_k, setup.template_text,
                   setup.embeddings, &out.warnings);
  emit(observer, {{"event", "run_start"},
                  {"mode", "agentic"},
                  {"task", task.name},
                  {"fewshot", setup.fewshot_k},
                  {"rounds", n},
                  {"examples", prompt.example_ids}});
  for (const std::string& w : out.warnings) {
    emit(observer, {{"event", "warning"}, {"text", w}});
  }
  emit(observer, {{"event", "prompt"}, {"text", prompt.text}});

  MineOptions mine_opts;
  mine_opts.classify = setup.classify;
  std::vector<ChatMessage> messages = {{"user", prompt.text}};
  CandidateSet all;
  ClassificationMap seen;
  bool have_result = false;

  for (int round = 1; round <= n; ++round) {
    GeneratorRequest request;
    request.messages = messages;
    request.sampling = setup.sampling;
    std::string response;
    try {
      response = generator.generate(request);
    } catch (const Error& e) {
      out.aborted = true;
      out.abort_reason = e.what();
      emit(observer,
           {{"event", "abort"}, {"round", round}, {"reason", out.abort_reason}});
      break;
    }
    out.rounds_used = round;
    messages.push_back({"assistant", response});
    CandidateSet fresh = parse_response(response, generator.id(), round);
    emit(observer, {{"event", "sample"},
                    {"round", round},
                    {"response", response},
                    {"lemmas", lemma_texts(fresh)}});
    all.merge(fresh);

    // First the round's own candidates; only when they fail, everything
    // collected so far (earlier rounds may combine with the new lemmas).
    StrengtheningResult fresh_result =
        lemma_mine(ctx.design, ctx.prop, fresh, budget, config, mine_opts);
    record_classifications(seen, fresh_result.classified);
    emit(observer, mined_event(round, "round", fresh_result));
    if (fresh_result.certified) {
      out.result = std::move(fresh_result);
      have_result = true;
      out.rounds.push_back(std::move(fresh));
      break;
    }
    StrengtheningResult union_result =
        lemma_mine(ctx.design, ctx.prop, all, budget, config, mine_opts);
    record_classifications(seen, union_result.classified);
    emit(observer, mined_event(round, "union", union_result));
    bool certified = union_result.certified;
    out.result = std::move(union_result);
    have_result = true;
    if (certified) {
      out.rounds.push_back(std::move(fresh));
      break;
    }

    if (round < n) {
      std::string feedback = generate_repair_msg(
          in_candidate_order(fresh, fresh_result.classified), round,
          setup.reminder_text);
      messages.push_back({"user", feedback});
      emit(observer,
           {{"event", "feedback"}, {"round", round}, {"text", feedback}});
    }
    out.rounds.push_back(std::move(fresh));
  }

  if (!have_result) {
    // Aborted before any round finished; classify whatever arrived.
    out.result =
        lemma_mine(ctx.design, ctx.prop, all, budget, config, mine_opts);
    record_classifications(seen, out.result.classified);
    emit(observer, mined_event(out.rounds_used, "union", out.result));
  }
  out.counters = tally(seen, out.result.certified);
  emit(observer, {{"event", "run_end"},
                  {"counters", counters_json(out.counters)},
                  {"aborted", out.aborted}});
  return out;
}

}  // namespace inductor
