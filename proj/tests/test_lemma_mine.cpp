// SPDX-License-Identifier: Apache-2.0
//
// Lemma mining tests: text normalization and candidate bookkeeping, lemma
// classification against brute-force ground truth, the deterministic search
// order, and the prefix search — whose returned subsets are re-validated
// both by an independent strengthening check and, on small designs, by
// exhaustive subset enumeration.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include "inductor/candidates.hpp"
#include "inductor/diagnostics.hpp"
#include "inductor/explicit_state.hpp"
#include "inductor/frontend.hpp"
#include "inductor/lemma_mine.hpp"
#include "json.hpp"

using namespace inductor;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ElaboratedDesign arbiter() {
  return elaborate(parse_design(read_fixture("arbiter.sv")));
}

// Two swapping registers: reachable states keep a == b. Neither direction
// of the equality is 1-inductive alone, but the pair is.
ElaboratedDesign swap_design() {
  return elaborate(parse_design(
      "module m(clk, rst);\n"
      "  input clk, rst;\n"
      "  reg a, b;\n"
      "  always @(posedge clk)\n"
      "    if (rst) begin a <= 0; b <= 0; end\n"
      "    else begin a <= b; b <= a; end\n"
      "endmodule\n"));
}

const char* kMutexText = "~(ack0 && ack1)";
const char* kPropText =
    "@(posedge clk) disable iff (rst) (req1==1 && ack0==1 |-> ##1 ack1==1)";

CheckBudget quick() {
  CheckBudget b;
  b.timeout_secs = 30.0;
  return b;
}

ClassifiedLemma make_cl(const std::string& text, LemmaStatus status) {
  ClassifiedLemma c;
  c.candidate.source = text;
  c.normalized = normalize_lemma(text);
  c.status = status;
  return c;
}

}  // namespace

// --- Normalization ----------------------------------------------------------

TEST_CASE("lemma normalization collapses whitespace and wrappers") {
  CHECK(normalize_lemma("  ~( ack0   &&\n\t ack1 )  ") == "~( ack0 && ack1 )");
  CHECK(normalize_lemma("a && b;") == "a && b");
  CHECK(normalize_lemma("property mutex;\n  ~(ack0 && ack1);\nendproperty") ==
        "~(ack0 && ack1)");
  CHECK(normalize_lemma("property p_1; a |-> b; endproperty\n") == "a |-> b");

  // Unicode operator glyphs are rewritten before comparison.
  CHECK(normalize_lemma("¬(ack0 ∧ ack1)") == "!(ack0 && ack1)");

  // Incomplete wrappers are left alone.
  CHECK(normalize_lemma("property p; a && b") == "property p; a && b");
  CHECK(normalize_lemma("a && endproperty") == "a && endproperty");
  CHECK(normalize_lemma("property_x && y") == "property_x && y");

  // Content-free text normalizes to the empty string.
  CHECK(normalize_lemma("   \n\t ") == "");
  CHECK(normalize_lemma(" ;; ") == "");
  CHECK(normalize_lemma("property p; ; endproperty") == "");
}

// --- Candidate sets ---------------------------------------------------------

TEST_CASE("candidate sets deduplicate by normalized text") {
  CandidateSet set;
  CHECK(set.add({"~(ack0 && ack1)", "gen-a", 0}));
  CHECK_FALSE(set.add({"  ~(ack0   && ack1) ;", "gen-b", 1}));
  CHECK_FALSE(
      set.add({"property mutex; ~(ack0 && ack1); endproperty", "gen-c", 2}));
  CHECK_FALSE(set.add({"   ", "gen-a", 0}));  // empty after normalization
  CHECK(set.add({"!req0", "gen-a", 0}));
  REQUIRE(set.lemmas.size() == 2);
  CHECK(set.lemmas[0].origin == "gen-a");  // first occurrence wins
  CHECK(set.contains("~(ack0&&ack1)") == false);  // spacing is significant
  CHECK(set.contains("~(ack0 &&  ack1)"));

  CandidateSet other;
  other.add({"!req0", "gen-d", 3});      // duplicate
  other.add({"!req1", "gen-d", 3});      // new
  other.raw_responses.push_back("raw");
  other.diagnostics.push_back("note");
  set.merge(other);
  REQUIRE(set.lemmas.size() == 3);
  CHECK(set.lemmas[2].source == "!req1");
  CHECK(set.raw_responses.size() == 1);
  CHECK(set.diagnostics.size() == 1);
}

TEST_CASE("candidate exchange round-trips through JSON") {
  CandidateSet set;
  set.add({"~(ack0 && ack1)", "mock", 0});
  set.add({"req0 |-> ##1 ack0", "mock", 2});

  std::string json = candidates_to_json(set);
  CandidateSet back = candidates_from_json(json);
  REQUIRE(back.lemmas.size() == 2);
  CHECK(back.lemmas[0].source == "~(ack0 && ack1)");
  CHECK(back.lemmas[0].origin == "mock");
  CHECK(back.lemmas[0].round == 0);
  CHECK(back.lemmas[1].round == 2);

  // Loading also deduplicates and tolerates missing provenance.
  CandidateSet dup = candidates_from_json(
      "[{\"source\": \"x && y\"}, {\"source\": \"x   && y\"}]");
  REQUIRE(dup.lemmas.size() == 1);
  CHECK(dup.lemmas[0].origin == "");

  CHECK_THROWS_AS(candidates_from_json("not json"), Error);
  CHECK_THROWS_AS(candidates_from_json("{\"a\": 1}"), Error);
  CHECK_THROWS_AS(candidates_from_json("[{\"origin\": \"m\"}]"), Error);
}

// --- Classification ---------------------------------------------------------

TEST_CASE("classification sorts candidates into verdict classes") {
  ElaboratedDesign d = arbiter();
  CheckBudget budget = quick();

  // The ack bits are exclusive by construction, so the mutex is inductive
  // as-is.
  ClassifiedLemma mutex = classify(d, std::string(kMutexText), budget);
  CHECK(mutex.status == LemmaStatus::Inductive);
  CHECK(mutex.normalized == "~(ack0 && ack1)");
  CHECK(mutex.diagnostics == "1-inductive");
  CHECK(mutex.bound == -1);
  REQUIRE(mutex.parsed.has_value());
  REQUIRE(mutex.compiled.has_value());

  // The response property holds but is not inductive on its own.
  ClassifiedLemma resp = classify(d, std::string(kPropText), budget);
  CHECK(resp.status == LemmaStatus::HoldsToBound);
  CHECK(resp.bound == budget.bmc_bound);
  CHECK(resp.diagnostics == "holds to bound 30, not 1-inductive");

  // Named references resolve against the design's declared properties.
  ClassifiedLemma named = classify(d, std::string("prop"), budget);
  CHECK(named.status == LemmaStatus::HoldsToBound);

  // Ground truth for the falsified candidate comes from the explicit-state
  // engine: both acks start low, so their conjunction fails immediately.
  CompiledProperty both = compile_property(parse_property("ack0 && ack1"), d);
  BruteForceResult oracle = brute_force_check(both.ts, both.safe);
  REQUIRE(oracle.verdict == BruteVerdict::Violated);
  REQUIRE(oracle.depth == 0);
  ClassifiedLemma falsified = classify(d, std::string("ack0 && ack1"), budget);
  CHECK(falsified.status == LemmaStatus::Falsified);
  CHECK(falsified.bound == oracle.depth);
  CHECK(falsified.diagnostics == "counterexample at depth 0");

  // Without the disable clause the response property is falsifiable: a
  // reset can clear the pending obligation's fulfillment.
  CompiledProperty bare = compile_property(
      parse_property("req1==1 && ack0==1 |-> ##1 ack1==1"), d);
  BruteForceResult bare_oracle = brute_force_check(bare.ts, bare.safe);
  REQUIRE(bare_oracle.verdict == BruteVerdict::Violated);
  ClassifiedLemma undisabled =
      classify(d, std::string("req1==1 && ack0==1 |-> ##1 ack1==1"), budget);
  CHECK(undisabled.status == LemmaStatus::Falsified);
  CHECK(undisabled.bound == bare_oracle.depth);
}

TEST_CASE("classification turns every failure into a status") {
  ElaboratedDesign d = arbiter();
  CheckBudget budget = quick();

  auto ill = [&](const std::string& text) {
    ClassifiedLemma c = classify(d, text, budget);
    CHECK(c.status == LemmaStatus::IllFormed);
    CHECK_FALSE(c.parsed.has_value());
    CHECK_FALSE(c.compiled.has_value());
    CHECK_FALSE(c.diagnostics.empty());
    return c.diagnostics;
  };

  CHECK(ill("@@@ not a property").find("syntax error") != std::string::npos);
  CHECK(ill("ghost == 1").find("unknown signal") != std::string::npos);
  CHECK(ill("req0 |-> ##9 ack0").find("temporal depth") != std::string::npos);
  CHECK(ill("") == "empty lemma text");
  CHECK(ill("  ;  ") == "empty lemma text");

  CheckBudget bad;
  bad.timeout_secs = 0;
  CHECK_THROWS_AS(classify(d, std::string(kMutexText), bad), ConfigError);
}

namespace {

// A scripted solver that answers UNSAT except for one chosen invocation,
// where it hangs. Invocations are counted through a side file.
std::string write_hang_on_nth_script(int n) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "fake_solvers";
  std::filesystem::create_directories(dir);
  std::filesystem::path counter = dir / "mine_calls.txt";
  std::filesystem::remove(counter);
  std::filesystem::path path = dir / "mine_hang_on_nth.sh";
  {
    std::ofstream out(path);
    out << "#!/bin/sh\n"
        << "f=\"" << counter.string() << "\"\n"
        << "n=$(cat \"$f\" 2>/dev/null || echo 0)\n"
        << "n=$((n+1))\n"
        << "echo $n > \"$f\"\n"
        << "if [ \"$n\" -eq " << n << " ]; then sleep 30; fi\n"
        << "echo \"s UNSATISFIABLE\"\n";
  }
  REQUIRE(chmod(path.c_str(), 0755) == 0);
  return path.string();
}

std::string write_hang_script() {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "fake_solvers";
  std::filesystem::create_directories(dir);
  std::filesystem::path path = dir / "mine_hang.sh";
  {
    std::ofstream out(path);
    out << "#!/bin/sh\nsleep 30\n";
  }
  REQUIRE(chmod(path.c_str(), 0755) == 0);
  return path.string();
}

}  // namespace

TEST_CASE("a timed-out induction step downgrades to holds-to-bound") {
  ElaboratedDesign d = arbiter();
  CheckBudget tight = quick();
  tight.timeout_secs = 0.2;

  // k-induction at k=1 issues the depth-0 base query first, then the step
  // query. Hanging on the second call times out exactly the step; the
  // bounded re-check that follows runs clean.
  SolverConfig step_stuck{write_hang_on_nth_script(2)};
  ClassifiedLemma c =
      classify(d, std::string(kMutexText), tight, step_stuck);
  CHECK(c.status == LemmaStatus::HoldsToBound);
  CHECK(c.bound == tight.bmc_bound);
  CHECK(c.diagnostics == "holds to bound 30, induction step timed out");

  // When bounded checking cannot finish either, the lemma stays Unknown.
  SolverConfig stuck{write_hang_script()};
  ClassifiedLemma u = classify(d, std::string(kMutexText), tight, stuck);
  CHECK(u.status == LemmaStatus::Unknown);
  CHECK(u.diagnostics == "timeout");
}

TEST_CASE("parallel classification matches the serial reference") {
  ElaboratedDesign d = arbiter();
  CandidateSet set;
  set.add({kMutexText, "a", 0});
  set.add({kPropText, "a", 0});
  set.add({"ack0 && ack1", "b", 1});
  set.add({"ghost == 1", "b", 1});
  set.add({"!ack0", "c", 2});
  set.add({"req0 |-> ##2 ack0", "c", 2});

  CheckBudget budget = quick();
  std::vector<ClassifiedLemma> serial = classify_all_serial(d, set, budget);
  ClassifyOptions par;
  par.parallel = true;
  std::vector<ClassifiedLemma> parallel =
      classify_all(d, set, budget, {}, par);

  REQUIRE(serial.size() == set.lemmas.size());
  REQUIRE(parallel.size() == serial.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(parallel[i].candidate.source == serial[i].candidate.source);
    CHECK(parallel[i].normalized == serial[i].normalized);
    CHECK(parallel[i].status == serial[i].status);
    CHECK(parallel[i].diagnostics == serial[i].diagnostics);
    CHECK(parallel[i].bound == serial[i].bound);
  }
}

// --- Search order -----------------------------------------------------------

TEST_CASE("candidate ordering: inductive first, then lexicographic") {
  std::vector<ClassifiedLemma> classified = {
      make_cl("b", LemmaStatus::HoldsToBound),
      make_cl("z", LemmaStatus::Inductive),
  };
  std::vector<ClassifiedLemma> ordered = order_candidates(classified);
  REQUIRE(ordered.size() == 2);
  CHECK(ordered[0].normalized == "z");
  CHECK(ordered[1].normalized == "b");

  ordered = order_candidates({make_cl("abd", LemmaStatus::Inductive),
                              make_cl("abc", LemmaStatus::Inductive)});
  REQUIRE(ordered.size() == 2);
  CHECK(ordered[0].normalized == "abc");
  CHECK(ordered[1].normalized == "abd");

  // Duplicates keep their first occurrence; unusable classes are excluded.
  ClassifiedLemma first = make_cl("a  && b", LemmaStatus::Inductive);
  first.candidate.origin = "first";
  ClassifiedLemma second = make_cl("a && b", LemmaStatus::Inductive);
  second.candidate.origin = "second";
  ordered = order_candidates({first, second,
                              make_cl("bad", LemmaStatus::Falsified),
                              make_cl("@@@", LemmaStatus::IllFormed),
                              make_cl("slow", LemmaStatus::Unknown)});
  REQUIRE(ordered.size() == 1);
  CHECK(ordered[0].candidate.origin == "first");
}

// --- Mining -----------------------------------------------------------------

TEST_CASE("mining the arbiter with the mutex lemma certifies the property") {
  ElaboratedDesign d = arbiter();
  PropRef prop = d.properties.at("prop");
  CheckBudget budget = quick();

  CandidateSet set;
  set.add({kMutexText, "scripted", 0});
  StrengtheningResult r = lemma_mine(d, prop, set, budget);

  CHECK(r.certified);
  CHECK(r.route == "single");
  REQUIRE(r.subset.size() == 1);
  CHECK(r.subset[0].normalized == "~(ack0 && ack1)");
  REQUIRE(r.certificate.size() == 1);
  CHECK(r.certificate[0].kind == "single");
  CHECK(r.certificate[0].lemmas == std::vector<std::string>{"~(ack0 && ack1)"});
  CHECK(r.certificate[0].verdict == StrengtheningStatus::Certified);
  CHECK(r.stats.total == 1);
  CHECK(r.stats.inductive == 1);
  CHECK(r.stats.strengthening_checks == 1);
  CHECK(r.stats.timeouts == 0);

  // The returned subset passes an independent re-check and the
  // explicit-state closure oracle: every reachable state satisfies the
  // strengthened conjunction.
  CHECK(check_strengthening(d, prop, {*r.subset[0].parsed}, budget) ==
        StrengtheningStatus::Certified);
  CompiledProperty conj = compile_group({*r.subset[0].parsed, prop}, d);
  CHECK(brute_force_check(conj.ts, conj.safe).verdict == BruteVerdict::Holds);
}

TEST_CASE("mining with no candidates leaves the property unresolved") {
  ElaboratedDesign d = arbiter();
  StrengtheningResult r =
      lemma_mine(d, d.properties.at("prop"), CandidateSet{}, quick());
  CHECK_FALSE(r.certified);
  CHECK(r.route == "none");
  CHECK(r.subset.empty());
  REQUIRE(r.certificate.size() == 1);  // the length-0 prefix: prop alone
  CHECK(r.certificate[0].kind == "prefix");
  CHECK(r.certificate[0].lemmas.empty());
  CHECK(r.certificate[0].verdict == StrengtheningStatus::NotInductive);
  CHECK(r.stats.total == 0);
  CHECK(r.stats.strengthening_checks == 1);
}

TEST_CASE("prefix search finds a helper that is not inductive alone") {
  ElaboratedDesign d = swap_design();
  PropRef prop = parse_property("!(a && !b)");
  PropRef helper = parse_property("!(b && !a)");
  CheckBudget budget = quick();

  // Oracle: of the two candidate subsets, only {helper} certifies.
  REQUIRE(check_strengthening(d, prop, {}, budget) ==
          StrengtheningStatus::NotInductive);
  REQUIRE(check_strengthening(d, prop, {helper}, budget) ==
          StrengtheningStatus::Certified);

  CandidateSet set;
  set.add({"!(b && !a)", "scripted", 0});
  StrengtheningResult r = lemma_mine(d, prop, set, budget);

  CHECK(r.certified);
  CHECK(r.route == "prefix");
  REQUIRE(r.subset.size() == 1);
  CHECK(r.subset[0].normalized == "!(b && !a)");
  CHECK(r.subset[0].status == LemmaStatus::HoldsToBound);
  // No single-lemma shortcut ran (no inductive candidates), so the log is
  // the two prefixes in order.
  REQUIRE(r.certificate.size() == 2);
  CHECK(r.certificate[0].kind == "prefix");
  CHECK(r.certificate[0].lemmas.empty());
  CHECK(r.certificate[0].verdict == StrengtheningStatus::NotInductive);
  CHECK(r.certificate[1].lemmas.size() == 1);
  CHECK(r.certificate[1].verdict == StrengtheningStatus::Certified);

  CompiledProperty conj = compile_group({helper, prop}, d);
  CHECK(brute_force_check(conj.ts, conj.safe).verdict == BruteVerdict::Holds);
}

TEST_CASE("the returned subset is the shortest certifying prefix") {
  // Ordering puts the inductive-but-useless lemma first, so the certified
  // prefix has length 2 even though the helper alone would do: the search
  // walks prefixes of a fixed order, not all subsets.
  ElaboratedDesign d = swap_design();
  PropRef prop = parse_property("!(a && !b)");
  CheckBudget budget = quick();

  CandidateSet set;
  set.add({"!(b && !a)", "scripted", 0});  // HoldsToBound, the real helper
  set.add({"!(a && b)", "scripted", 0});   // Inductive, useless alone
  StrengtheningResult r = lemma_mine(d, prop, set, budget);

  CHECK(r.certified);
  CHECK(r.route == "prefix");
  REQUIRE(r.subset.size() == 2);
  CHECK(r.subset[0].normalized == "!(a && b)");
  CHECK(r.subset[0].status == LemmaStatus::Inductive);
  CHECK(r.subset[1].normalized == "!(b && !a)");
  CHECK(r.subset[1].status == LemmaStatus::HoldsToBound);

  // Exhaustive subset oracle over both candidates: the returned prefix is
  // certified, every shorter prefix of the order is not, and the minimal
  // certifying subset {helper} is not a prefix — by design out of reach.
  PropRef useless = parse_property("!(a && b)");
  PropRef helper = parse_property("!(b && !a)");
  REQUIRE(check_strengthening(d, prop, {useless, helper}, budget) ==
          StrengtheningStatus::Certified);
  REQUIRE(check_strengthening(d, prop, {useless}, budget) ==
          StrengtheningStatus::NotInductive);
  REQUIRE(check_strengthening(d, prop, {helper}, budget) ==
          StrengtheningStatus::Certified);
  REQUIRE(check_strengthening(d, prop, {}, budget) ==
          StrengtheningStatus::NotInductive);

  // Log shape: failed single test on the inductive candidate, then
  // prefixes of length 0, 1 (a repeat of the single, as a prefix) and 2.
  REQUIRE(r.certificate.size() == 4);
  CHECK(r.certificate[0].kind == "single");
  CHECK(r.certificate[0].verdict == StrengtheningStatus::NotInductive);
  CHECK(r.certificate[1].kind == "prefix");
  CHECK(r.certificate[1].lemmas.empty());
  CHECK(r.certificate[2].lemmas.size() == 1);
  CHECK(r.certificate[3].lemmas.size() == 2);
  CHECK(r.certificate[3].verdict == StrengtheningStatus::Certified);
  CHECK(r.stats.strengthening_checks == 4);

  CompiledProperty conj = compile_group({useless, helper, prop}, d);
  CHECK(brute_force_check(conj.ts, conj.safe).verdict == BruteVerdict::Holds);
}

TEST_CASE("an already-inductive property certifies at prefix length zero") {
  ElaboratedDesign d = swap_design();
  PropRef prop = parse_property("!(a && b)");
  CandidateSet set;
  set.add({"!(b && !a)", "scripted", 0});  // HoldsToBound; never needed

  StrengtheningResult r = lemma_mine(d, prop, set, quick());
  CHECK(r.certified);
  CHECK(r.route == "prefix");
  CHECK(r.subset.empty());  // certified with no lemmas at all
  REQUIRE(r.certificate.size() == 1);
  CHECK(r.certificate[0].lemmas.empty());
  CHECK(r.certificate[0].verdict == StrengtheningStatus::Certified);
}

TEST_CASE("falsified and ill-formed candidates never enter the subset") {
  ElaboratedDesign d = arbiter();
  CandidateSet set;
  set.add({"ack0 && ack1", "llm", 0});   // falsified at depth 0
  set.add({"@@@ garbage", "llm", 0});    // unparseable
  set.add({kMutexText, "llm", 1});

  StrengtheningResult r = lemma_mine(d, d.properties.at("prop"), set, quick());
  CHECK(r.certified);
  REQUIRE(r.subset.size() == 1);
  CHECK(r.subset[0].normalized == "~(ack0 && ack1)");
  CHECK(r.stats.total == 3);
  CHECK(r.stats.falsified == 1);
  CHECK(r.stats.ill_formed == 1);
  CHECK(r.stats.inductive == 1);

  // The discarded candidates stay visible in the classification report.
  REQUIRE(r.classified.size() == 3);
  int falsified = 0, ill_formed = 0;
  for (const ClassifiedLemma& c : r.classified) {
    if (c.status == LemmaStatus::Falsified) ++falsified;
    if (c.status == LemmaStatus::IllFormed) ++ill_formed;
  }
  CHECK(falsified == 1);
  CHECK(ill_formed == 1);
}

TEST_CASE("identical candidate multisets mine to identical bytes") {
  ElaboratedDesign d = swap_design();
  PropRef prop = parse_property("!(a && !b)");
  CheckBudget budget = quick();

  CandidateSet forward;
  forward.add({"!(b && !a)", "scripted", 0});
  forward.add({"!(a && b)", "scripted", 0});
  CandidateSet backward;
  backward.add({"!(a && b)", "scripted", 0});
  backward.add({"!(b && !a)", "scripted", 0});

  std::string a = to_json(lemma_mine(d, prop, forward, budget));
  std::string b = to_json(lemma_mine(d, prop, backward, budget));
  std::string c = to_json(lemma_mine(d, prop, forward, budget));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("timeouts surface in stats instead of aborting the search") {
  ElaboratedDesign d = arbiter();
  CheckBudget tight = quick();
  tight.timeout_secs = 0.2;
  SolverConfig stuck{write_hang_script()};

  CandidateSet set;
  set.add({kMutexText, "a", 0});
  set.add({"!ack0", "a", 0});
  StrengtheningResult r =
      lemma_mine(d, d.properties.at("prop"), set, tight, stuck);

  CHECK_FALSE(r.certified);
  CHECK(r.route == "none");
  CHECK(r.subset.empty());
  CHECK(r.stats.unknown == 2);  // both classifications timed out
  REQUIRE(r.certificate.size() == 1);  // only the length-0 prefix was left
  CHECK(r.certificate[0].verdict == StrengtheningStatus::Unknown);
  CHECK(r.stats.timeouts == 3);  // two classifications + one prefix check
}

TEST_CASE("mining results serialize with the certificate log") {
  ElaboratedDesign d = arbiter();
  CandidateSet set;
  set.add({kMutexText, "scripted", 0});
  set.add({"ack0 && ack1", "scripted", 1});
  StrengtheningResult r = lemma_mine(d, d.properties.at("prop"), set, quick());

  nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["certified"] == true);
  CHECK(j["route"] == "single");
  REQUIRE(j["subset"].size() == 1);
  CHECK(j["subset"][0]["text"] == "~(ack0 && ack1)");
  CHECK(j["subset"][0]["origin"] == "scripted");
  CHECK(j["subset"][0]["status"] == "inductive");
  REQUIRE(j["certificate"].size() == 1);
  CHECK(j["certificate"][0]["kind"] == "single");
  CHECK(j["certificate"][0]["verdict"] == "certified");
  CHECK(j["stats"]["total"] == 2);
  CHECK(j["stats"]["falsified"] == 1);
  CHECK(j["stats"]["strengthening_checks"] == 1);
  REQUIRE(j["classified"].size() == 2);
  // Sorted by normalized text for reproducibility.
  CHECK(j["classified"][0]["text"] == "ack0 && ack1");
  CHECK(j["classified"][0]["status"] == "falsified");
  CHECK(j["classified"][0]["bound"] == 0);
  CHECK(j["classified"][1]["text"] == "~(ack0 && ack1)");
}
