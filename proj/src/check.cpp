// SPDX-License-Identifier: Apache-2.0
//
// Bounded model checking, k-induction and the inductive-strengthening
// certificate check. Every solver query is built from scratch with its own
// encoder and budgeted individually, so these functions are safe to call
// from parallel workers.

#include <optional>
#include <string>
#include <vector>

#include "inductor/checker.hpp"
#include "inductor/diagnostics.hpp"

namespace inductor {

void validate(const CheckBudget& budget) {
  if (!(budget.timeout_secs > 0))
    throw ConfigError("check timeout must be positive");
  if (budget.bmc_bound < 1) throw ConfigError("bmc bound must be at least 1");
  if (budget.k < 1) throw ConfigError("induction depth must be at least 1");
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Inductive: return "inductive";
    case CheckStatus::HoldsToBound: return "holds-to-bound";
    case CheckStatus::Falsified: return "falsified";
    case CheckStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(StrengtheningStatus status) {
  switch (status) {
    case StrengtheningStatus::Certified: return "certified";
    case StrengtheningStatus::NotInductive: return "not-inductive";
    case StrengtheningStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Reads the path valuations for frames 0..depth out of a model.
Trace extract_trace(const Encoder& enc, const SolveResult& r,
                    const TransitionSystem& ts, int depth) {
  Trace trace;
  for (int f = 0; f <= depth; ++f) {
    State s;
    s.bits = Valuation(ts.num_vars());
    for (int i = 0; i < ts.num_vars(); ++i)
      s.bits.set(i, r.model[std::size_t(enc.state_literal(f, i))]);
    Valuation in(ts.num_inputs());
    for (int i = 0; i < ts.num_inputs(); ++i)
      in.set(i, r.model[std::size_t(enc.input_literal(f, i))]);
    trace.states.push_back(std::move(s));
    trace.inputs.push_back(std::move(in));
  }
  return trace;
}

CheckVerdict unknown_timeout() {
  CheckVerdict v;
  v.status = CheckStatus::Unknown;
  v.reason = UnknownReason::Timeout;
  return v;
}

// One bounded query: is some initialized path unsafe at exactly `depth`?
// Returns Falsified with the trace, Unknown on timeout, or nothing.
std::optional<CheckVerdict> unsafe_at_depth(const TransitionSystem& ts,
                                            const FormulaRef& safe, int depth,
                                            const CheckBudget& budget,
                                            const SolverConfig& config) {
  Encoder enc(ts, depth);
  enc.assert_at(ts.init(), 0);
  for (int t = 0; t < depth; ++t) enc.assert_at(ts.trans(), t);
  enc.assert_at(f_not(safe), depth);
  SolveResult r = solve(enc.cnf(), budget.timeout_secs, config);
  if (r.status == SatStatus::Timeout) return unknown_timeout();
  if (r.status == SatStatus::Unsat) return std::nullopt;
  CheckVerdict v;
  v.status = CheckStatus::Falsified;
  v.trace = extract_trace(enc, r, ts, depth);
  return v;
}

// Requires the state variables of two frames to differ in at least one bit.
void assert_frames_differ(Encoder& enc, const TransitionSystem& ts, int a,
                          int b) {
  std::vector<int> any;
  for (int i = 0; i < ts.num_vars(); ++i) {
    int x = enc.state_literal(a, i);
    int y = enc.state_literal(b, i);
    int d = enc.cnf().add_var();
    enc.cnf().add_clause({-d, x, y});
    enc.cnf().add_clause({-d, -x, -y});
    enc.cnf().add_clause({d, -x, y});
    enc.cnf().add_clause({d, x, -y});
    any.push_back(d);
  }
  enc.cnf().add_clause(std::move(any));
}

}  // namespace

CheckVerdict bmc(const TransitionSystem& ts, const FormulaRef& safe,
                 const CheckBudget& budget, const SolverConfig& config) {
  validate(budget);
  for (int depth = 0; depth <= budget.bmc_bound; ++depth) {
    std::optional<CheckVerdict> bad =
        unsafe_at_depth(ts, safe, depth, budget, config);
    if (bad) return *bad;
  }
  CheckVerdict v;
  v.status = CheckStatus::HoldsToBound;
  v.bound = budget.bmc_bound;
  return v;
}

CheckVerdict kinduction(const TransitionSystem& ts, const FormulaRef& safe,
                        const CheckBudget& budget,
                        const SolverConfig& config) {
  validate(budget);
  const int k = budget.k;

  // Base: no initialized path of length < k is unsafe.
  for (int depth = 0; depth < k; ++depth) {
    std::optional<CheckVerdict> bad =
        unsafe_at_depth(ts, safe, depth, budget, config);
    if (bad) return *bad;
  }

  // Step: k safe transitions from unconstrained states, then a violation.
  // For k >= 2 the window must be a simple path (at k = 1 the constraint
  // would only relate a state to its successor, which a self-loop on a safe
  // state may legitimately violate).
  Encoder enc(ts, k);
  for (int t = 0; t < k; ++t) {
    enc.assert_at(safe, t);
    enc.assert_at(ts.trans(), t);
  }
  enc.assert_at(f_not(safe), k);
  if (k >= 2)
    for (int a = 0; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) assert_frames_differ(enc, ts, a, b);

  SolveResult r = solve(enc.cnf(), budget.timeout_secs, config);
  if (r.status == SatStatus::Timeout) return unknown_timeout();
  if (r.status == SatStatus::Unsat) {
    CheckVerdict v;
    v.status = CheckStatus::Inductive;
    return v;
  }
  // Inconclusive: the property may still hold even though it is not
  // k-inductive. Fall back to plain bounded search.
  return bmc(ts, safe, budget, config);
}

StrengtheningStatus check_strengthening(const ElaboratedDesign& design,
                                        const PropRef& prop,
                                        const std::vector<PropRef>& lemmas,
                                        const CheckBudget& budget,
                                        const SolverConfig& config) {
  validate(budget);
  std::vector<PropRef> group = lemmas;
  group.push_back(prop);
  CompiledProperty compiled = compile_group(group, design);
  CheckVerdict v = kinduction(compiled.ts, compiled.safe, budget, config);
  switch (v.status) {
    case CheckStatus::Inductive: return StrengtheningStatus::Certified;
    case CheckStatus::HoldsToBound:
    case CheckStatus::Falsified: return StrengtheningStatus::NotInductive;
    case CheckStatus::Unknown: return StrengtheningStatus::Unknown;
  }
  return StrengtheningStatus::Unknown;
}

bool trace_replays(const TransitionSystem& ts, const FormulaRef& safe,
                   const Trace& trace) {
  std::size_t n = trace.states.size();
  if (n == 0 || trace.inputs.size() != n) return false;
  if (!eval(ts.init(), trace.states[0].bits)) return false;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    std::optional<Valuation> next(trace.states[t + 1].bits);
    std::optional<Valuation> in(trace.inputs[t]);
    if (!eval(ts.trans(), trace.states[t].bits, next, in)) return false;
  }
  for (std::size_t t = 0; t < n; ++t) {
    std::optional<Valuation> in(trace.inputs[t]);
    bool ok = eval(safe, trace.states[t].bits, std::nullopt, in);
    if (t + 1 < n ? !ok : ok) return false;
  }
  return true;
}

}  // namespace inductor
