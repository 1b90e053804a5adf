// SPDX-License-Identifier: Apache-2.0
#include "inductor/transition_system.hpp"

#include <set>

namespace inductor {

TransitionSystem::TransitionSystem(std::vector<std::string> vars,
                                   std::vector<std::string> inputs,
                                   FormulaRef init, FormulaRef trans,
                                   std::vector<FormulaRef> next_functions,
                                   std::vector<SourceBit> source_map)
    : vars_(std::move(vars)),
      inputs_(std::move(inputs)),
      init_(std::move(init)),
      trans_(std::move(trans)),
      next_(std::move(next_functions)),
      source_map_(std::move(source_map)) {
  for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
    var_lookup_.emplace(vars_[i], i);
  for (int i = 0; i < static_cast<int>(inputs_.size()); ++i)
    input_lookup_.emplace(inputs_[i], i);
  validate(*this);
}

std::optional<int> TransitionSystem::var_index(const std::string& name) const {
  auto it = var_lookup_.find(name);
  if (it == var_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> TransitionSystem::input_index(
    const std::string& name) const {
  auto it = input_lookup_.find(name);
  if (it == input_lookup_.end()) return std::nullopt;
  return it->second;
}

FormulaRef TransitionSystem::var(const std::string& name, bool primed) const {
  auto i = var_index(name);
  if (!i) throw UnknownSignal(name);
  return f_state(*i, primed);
}

FormulaRef TransitionSystem::input(const std::string& name) const {
  auto i = input_index(name);
  if (!i) throw UnknownSignal(name);
  return f_input(*i);
}

TransitionSystem TransitionSystem::extend(
    const std::vector<std::string>& new_vars,
    const std::vector<FormulaRef>& new_next_functions,
    const std::vector<bool>& new_init_values) const {
  if (!is_functional())
    throw Error("cannot extend a relational-only transition system");
  if (new_vars.size() != new_next_functions.size() ||
      new_vars.size() != new_init_values.size())
    throw Error("extend: mismatched argument lengths");

  std::vector<std::string> vars = vars_;
  std::vector<FormulaRef> next = next_;
  std::vector<SourceBit> smap = source_map_;
  FormulaRef init = init_;
  FormulaRef trans = trans_;

  int base = num_vars();
  for (std::size_t j = 0; j < new_vars.size(); ++j) {
    int idx = base + static_cast<int>(j);
    vars.push_back(new_vars[j]);
    next.push_back(new_next_functions[j]);
    if (!smap.empty()) smap.push_back({new_vars[j], 0});
    init = f_and(init, new_init_values[j] ? f_state(idx) : f_not(f_state(idx)));
    trans = f_and(trans, f_iff(f_state(idx, true), new_next_functions[j]));
  }
  return TransitionSystem(std::move(vars), inputs_, std::move(init),
                          std::move(trans), std::move(next), std::move(smap));
}

namespace {

struct RefScan {
  bool primed = false;
  bool inputs = false;
  int max_state = -1;
  int max_input = -1;
};

void scan(const FormulaRef& f, RefScan& out) {
  if (f->op == Formula::Op::Var) {
    const VarRef& v = f->var;
    if (v.kind == VarRef::Kind::Input) {
      out.inputs = true;
      out.max_input = std::max(out.max_input, v.index);
    } else {
      if (v.primed) out.primed = true;
      out.max_state = std::max(out.max_state, v.index);
    }
  }
  for (const auto& a : f->args) scan(a, out);
}

}  // namespace

void validate(const TransitionSystem& ts) {
  std::set<std::string> names(ts.vars().begin(), ts.vars().end());
  if (static_cast<int>(names.size()) != ts.num_vars())
    throw Error("duplicate state variable name");
  for (const auto& in : ts.inputs())
    if (!names.insert(in).second)
      throw Error("duplicate signal name: " + in);

  RefScan i;
  scan(ts.init(), i);
  if (i.primed) throw Error("init references a primed variable");
  if (i.inputs) throw Error("init references an input");
  if (i.max_state >= ts.num_vars())
    throw Error("init references an undeclared variable");

  RefScan t;
  scan(ts.trans(), t);
  if (t.max_state >= ts.num_vars())
    throw Error("trans references an undeclared variable");
  if (t.max_input >= ts.num_inputs())
    throw Error("trans references an undeclared input");

  if (ts.is_functional()) {
    if (static_cast<int>(ts.next_functions().size()) != ts.num_vars())
      throw Error("next-state function count does not match variable count");
    for (const auto& fn : ts.next_functions()) {
      RefScan n;
      scan(fn, n);
      if (n.primed) throw Error("next-state function references a primed variable");
      if (n.max_state >= ts.num_vars() || n.max_input >= ts.num_inputs())
        throw Error("next-state function references an undeclared signal");
    }
  }
}

std::string state_str(const TransitionSystem& ts, const State& s) {
  std::string out;
  for (int i = 0; i < ts.num_vars(); ++i) {
    if (i) out += " ";
    out += ts.vars()[i] + "=" + (s.bits.get(i) ? "1" : "0");
  }
  return out;
}

}  // namespace inductor
