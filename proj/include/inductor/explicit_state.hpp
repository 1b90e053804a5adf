// SPDX-License-Identifier: Apache-2.0
//
// Explicit-state reachability for small transition systems.  This is the
// reference oracle the SAT-based engines are tested against: it enumerates
// states outright, so it is only usable when the packed state (and the input
// alphabet) fit in a couple dozen bits, but within that envelope its answers
// are exact and its traces are canonical (shortest, lowest-numbered).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "inductor/formula.hpp"
#include "inductor/transition_system.hpp"

namespace inductor {

// A finite trace: states[0] is an initial state and inputs[i] is the input
// valuation read in states[i].  The last input entry is the one that
// witnesses the safety violation in the final state; every earlier entry
// drives the step to the next state, so both vectors have the same length.
struct Trace {
  std::vector<State> states;
  std::vector<Valuation> inputs;

  int depth() const { return static_cast<int>(states.size()) - 1; }
};

enum class BruteVerdict {
  Holds,        // no reachable state can violate the property
  Violated,     // a counterexample trace was found
  CapExceeded,  // the visited-state budget ran out before a fixpoint
};

struct BruteForceResult {
  BruteVerdict verdict = BruteVerdict::Holds;
  std::optional<Trace> trace;  // present iff verdict == Violated
  std::uint64_t visited = 0;   // distinct states reached
  int depth = 0;               // BFS layers explored, or the violation depth
};

struct BruteForceOptions {
  int bit_cap = 20;                   // max state+input bits to enumerate
  std::uint64_t state_cap = 2000000;  // max distinct states to visit
  int max_depth = -1;                 // stop after this many layers; -1 = run
                                      // to fixpoint
  bool parallel = false;              // expand BFS frontiers with OpenMP
  int workers = 0;                    // thread count; 0 = runtime default
};

// All successor states of `s`, deduplicated and sorted by packed value.  Uses
// the per-variable next-state functions when the system has them; otherwise
// enumerates candidate next states against the relational formula.  Throws
// StateSpaceTooLarge when the enumeration would exceed `bit_cap` bits.
std::vector<State> successors(const TransitionSystem& ts, const State& s,
                              int bit_cap = 20);

// Breadth-first search over the reachable states.  A state is counted as a
// violation when some input valuation falsifies `safe` there; the returned
// trace ends in such a state and carries the offending input valuation in
// its final `inputs` slot.  Traces are shortest possible, with ties broken
// toward numerically smaller packed states and inputs, so results are
// reproducible run to run.  Throws StateSpaceTooLarge if the packed state and
// input widths together exceed `bit_cap`.
BruteForceResult brute_force_check(const TransitionSystem& ts,
                                   const FormulaRef& safe,
                                   const BruteForceOptions& opts = {});

}  // namespace inductor
