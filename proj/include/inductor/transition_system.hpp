// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inductor/formula.hpp"

namespace inductor {

// Where an elaborated state bit came from in the HDL source.
struct SourceBit {
  std::string register_name;
  int bit = 0;  // bit index within the declared register
};

// Bit-level transition system: named boolean state variables, free boolean
// inputs, an initial-state predicate over the state variables, and a
// transition relation over current state, inputs and next state.
//
// The relation is stored as a formula so monitors and constraints compose
// by conjunction, but systems built by the elaborator (and by monitor
// extension) additionally carry one next-state function per variable;
// those make the relation functional and enable fast explicit-state
// enumeration.
//
// Immutable after construction; safe to share across threads.
class TransitionSystem {
public:
  TransitionSystem(std::vector<std::string> vars,
                   std::vector<std::string> inputs, FormulaRef init,
                   FormulaRef trans,
                   std::vector<FormulaRef> next_functions = {},
                   std::vector<SourceBit> source_map = {});

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_inputs() const { return static_cast<int>(inputs_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const FormulaRef& init() const { return init_; }
  const FormulaRef& trans() const { return trans_; }

  bool is_functional() const { return !next_.empty(); }
  // Next-state function of variable i; only when is_functional().
  const FormulaRef& next_function(int i) const { return next_[i]; }
  const std::vector<FormulaRef>& next_functions() const { return next_; }

  const std::vector<SourceBit>& source_map() const { return source_map_; }

  std::optional<int> var_index(const std::string& name) const;
  std::optional<int> input_index(const std::string& name) const;

  // Formula leaves for named bits; throws UnknownSignal.
  FormulaRef var(const std::string& name, bool primed = false) const;
  FormulaRef input(const std::string& name) const;

  // Returns a new system with extra state variables appended. Each added
  // variable carries a next-state function (over the extended system) and
  // an initial value folded into init. Existing indices stay valid.
  TransitionSystem extend(
      const std::vector<std::string>& new_vars,
      const std::vector<FormulaRef>& new_next_functions,
      const std::vector<bool>& new_init_values) const;

private:
  std::vector<std::string> vars_;
  std::vector<std::string> inputs_;
  FormulaRef init_;
  FormulaRef trans_;
  std::vector<FormulaRef> next_;
  std::vector<SourceBit> source_map_;
  std::map<std::string, int> var_lookup_;
  std::map<std::string, int> input_lookup_;
};

// Total assignment to the state variables of one system.
struct State {
  Valuation bits;

  bool operator==(const State&) const = default;
};

// Renders a state as name=0/1 pairs.
std::string state_str(const TransitionSystem& ts, const State& s);

// Verifies the structural invariants documented on the class: init refers
// only to unprimed state variables, trans only to declared variables and
// inputs, names are unique. Throws Error on violation. Called by the
// constructor.
void validate(const TransitionSystem& ts);

}  // namespace inductor
