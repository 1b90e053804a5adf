// SPDX-License-Identifier: Apache-2.0
//
// SAT-backed safety checking: CNF encoding, a built-in CDCL solver (with an
// optional external DIMACS solver), bounded model checking, k-induction and
// the inductive-strengthening certificate check.
//
// Every entry point is a stateless free function; each call builds its own
// encoder and solver, so independent queries may run concurrently.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inductor/explicit_state.hpp"
#include "inductor/formula.hpp"
#include "inductor/frontend.hpp"
#include "inductor/transition_system.hpp"

namespace inductor {

// Clause database in the usual integer-literal form: variables are numbered
// from 1 and a literal is +v or -v. The empty clause is representable (it
// makes the formula unsatisfiable) but add_clause rejects zero literals and
// references past num_vars.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // Allocates a fresh variable and returns its (1-based) index.
  int add_var() { return ++num_vars; }
  void add_clause(std::vector<int> lits);
};

// Tseitin encoder over a time-unrolled transition system. Frame f assigns
// one CNF variable to every state bit and every input bit; a formula is
// encoded "at" a frame, with primed state references resolving to frame
// f+1. Variable numbering is deterministic: all frame variables first
// (frame by frame, states then inputs), then auxiliary gate variables in
// encoding order.
class Encoder {
 public:
  // Pre-allocates frames 0..last_frame. Formulas with primed references
  // may be encoded at frames 0..last_frame-1.
  Encoder(const TransitionSystem& ts, int last_frame);

  int last_frame() const { return last_frame_; }
  int state_literal(int frame, int var) const;
  int input_literal(int frame, int var) const;

  // Returns a literal equivalent to `f` evaluated at `frame`, adding the
  // defining clauses. Results are memoized per (node, frame).
  int encode(const FormulaRef& f, int frame);
  // Asserts `f` at `frame` (unit clause; top-level conjunctions are
  // flattened to avoid needless gate variables).
  void assert_at(const FormulaRef& f, int frame);

  Cnf& cnf() { return cnf_; }
  const Cnf& cnf() const { return cnf_; }
  Cnf take() { return std::move(cnf_); }

 private:
  const TransitionSystem& ts_;
  int last_frame_ = 0;
  Cnf cnf_;
  int true_var_ = 0;  // lazily pinned constant
  std::map<std::pair<const Formula*, int>, int> memo_;

  int constant(bool value);
};

// Encodes `f` over frames 0..last_frame and asserts it at frame 0 (primed
// references land in frame 1). Deterministic for identical inputs.
Cnf bitblast(const TransitionSystem& ts, const FormulaRef& f,
             int last_frame = 1);

// Renders the clause database in DIMACS CNF format.
std::string to_dimacs(const Cnf& cnf);

enum class SatStatus { Sat, Unsat, Timeout };

struct SolveResult {
  SatStatus status = SatStatus::Timeout;
  // Indexed by variable (entry 0 unused); meaningful when status == Sat.
  std::vector<bool> model;
};

// External solver configuration. When `external_path` is empty the built-in
// CDCL solver runs in process; otherwise the CNF is written to a temporary
// DIMACS file and `external_path <file>` is executed, with the verdict
// parsed from the conventional "s SATISFIABLE"/"s UNSATISFIABLE" and
// "v <literals>" output lines. A crashing or nonconforming process raises
// SolverCrash; exceeding the timeout kills the child and reports Timeout.
struct SolverConfig {
  std::string external_path;
};

// Decides satisfiability within the wall-clock budget. The built-in solver
// is conflict-driven with deterministic heuristics (activity-ordered
// decisions with lowest-index ties, saved phases starting at false, scripted
// restarts), so identical inputs produce identical models.
SolveResult solve(const Cnf& cnf, double timeout_secs,
                  const SolverConfig& config = {});

// Per-query resource budget for the checking operations.
struct CheckBudget {
  double timeout_secs = 30.0;  // wall clock per solver query
  int bmc_bound = 30;          // unrolling depth N (inclusive)
  int k = 1;                   // induction depth
};

// Throws ConfigError unless timeout_secs > 0, bmc_bound >= 1 and k >= 1.
void validate(const CheckBudget& budget);

enum class CheckStatus { Inductive, HoldsToBound, Falsified, Unknown };
enum class UnknownReason { Timeout, Resource };

std::string to_string(CheckStatus status);

struct CheckVerdict {
  CheckStatus status = CheckStatus::Unknown;
  int bound = 0;               // HoldsToBound: the bound that was exhausted
  std::optional<Trace> trace;  // Falsified: counterexample, least depth
  UnknownReason reason = UnknownReason::Timeout;

  bool certified() const { return status == CheckStatus::Inductive; }
};

// Bounded model checking: searches for an initialized path violating `safe`
// at depths 0..bmc_bound, in that order. Falsified carries the least-depth
// counterexample; if no depth is satisfiable the verdict is HoldsToBound.
// Any solver timeout aborts the search with Unknown.
CheckVerdict bmc(const TransitionSystem& ts, const FormulaRef& safe,
                 const CheckBudget& budget, const SolverConfig& config = {});

// k-induction. Base: no initialized path of length < k violates `safe`
// (depths 0..k-1). Step: k consecutive safe transitions imply safety of the
// state after them, with the leading states unconstrained; for k >= 2 the
// step path is additionally required to be simple (pairwise-distinct
// states). Both unsatisfiable => Inductive. A base counterexample =>
// Falsified. A satisfiable step with a passing base is inconclusive and
// downgrades to the bmc verdict. Timeouts => Unknown.
CheckVerdict kinduction(const TransitionSystem& ts, const FormulaRef& safe,
                        const CheckBudget& budget,
                        const SolverConfig& config = {});

inline CheckVerdict bmc(const CompiledProperty& prop,
                        const CheckBudget& budget,
                        const SolverConfig& config = {}) {
  return bmc(prop.ts, prop.safe, budget, config);
}
inline CheckVerdict kinduction(const CompiledProperty& prop,
                               const CheckBudget& budget,
                               const SolverConfig& config = {}) {
  return kinduction(prop.ts, prop.safe, budget, config);
}

enum class StrengtheningStatus { Certified, NotInductive, Unknown };

std::string to_string(StrengtheningStatus status);

// Checks whether `lemmas` form an inductive strengthening of `prop` on the
// design: the conjunction (and q1 and ... and qn and P) is compiled as one
// group (monitors unioned) and must be k-inductive under the budget, which
// checks initiation (on the monitor-extended initial states) and
// consecution exactly. Lemmas and property are compiled together because
// pipeline bits are numbered per group; separately compiled properties
// cannot be recombined.
StrengtheningStatus check_strengthening(const ElaboratedDesign& design,
                                        const PropRef& prop,
                                        const std::vector<PropRef>& lemmas,
                                        const CheckBudget& budget,
                                        const SolverConfig& config = {});

// True when the trace is a genuine counterexample: it starts in an initial
// state, every step satisfies the transition relation, and `safe` holds at
// every state except the last, where the recorded input valuation
// falsifies it.
bool trace_replays(const TransitionSystem& ts, const FormulaRef& safe,
                   const Trace& trace);

}  // namespace inductor
