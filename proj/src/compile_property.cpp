// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "inductor/frontend.hpp"
#include "lower.hpp"

namespace inductor {

namespace {

// A property flattened to its conjuncts, each with the clock/disable
// clauses that apply to it (own clauses win over inherited ones).
struct Unit {
  std::optional<std::string> clock;
  ExprRef disable;
  bool is_implication = false;
  ExprRef expr;                // boolean body, or antecedent
  std::vector<SeqElem> sequence;
};

void flatten(const PropRef& p, const ElaboratedDesign& design,
             std::optional<std::string> clock, ExprRef disable,
             std::vector<Unit>& out) {
  if (p->clock) clock = p->clock;
  if (p->disable) disable = p->disable;

  switch (p->kind) {
    case PropertyAst::Kind::And:
      flatten(p->lhs, design, clock, disable, out);
      flatten(p->rhs, design, clock, disable, out);
      return;
    case PropertyAst::Kind::Named: {
      auto it = design.properties.find(p->name);
      if (it == design.properties.end()) throw UnknownSignal(p->name);
      flatten(it->second, design, clock, disable, out);
      return;
    }
    case PropertyAst::Kind::Bool:
    case PropertyAst::Kind::Implication: {
      Unit u;
      u.clock = clock;
      u.disable = disable;
      u.is_implication = p->kind == PropertyAst::Kind::Implication;
      u.expr = p->expr;
      u.sequence = p->sequence;
      out.push_back(std::move(u));
      return;
    }
  }
}

}  // namespace

CompiledProperty compile_group(const std::vector<PropRef>& props,
                               const ElaboratedDesign& design,
                               const CompileOptions& opts) {
  std::vector<Unit> units;
  for (const auto& p : props)
    flatten(p, design, std::nullopt, nullptr, units);

  TransitionSystem ts = design.ts;
  const Env& env = design.views;
  std::vector<FormulaRef> safes;
  std::vector<std::string> monitor_vars;

  for (size_t k = 0; k < units.size(); ++k) {
    const Unit& u = units[k];
    if (u.clock && !design.clock.empty() && *u.clock != design.clock)
      throw ElaborationError("property is clocked on '" + *u.clock +
                             "' but the design clock is '" + design.clock +
                             "'");
    FormulaRef dis = u.disable ? lower_bool(u.disable, env) : f_false();

    if (!u.is_implication) {
      safes.push_back(f_or(dis, lower_bool(u.expr, env)));
      continue;
    }

    FormulaRef ante = lower_bool(u.expr, env);

    // Cumulative delay per sequence element.
    std::vector<std::pair<int, FormulaRef>> obligations;
    int depth = 0;
    for (const auto& elem : u.sequence) {
      depth += elem.delay;
      obligations.emplace_back(depth, lower_bool(elem.cond, env));
    }
    if (depth > opts.temporal_depth_cap)
      throw UnsupportedTemporalDepth(depth, opts.temporal_depth_cap);

    // Pipeline bits: bit j is high when the antecedent fired j cycles ago
    // and the disable signal has stayed low since (inclusive of the firing
    // cycle). All start at 0.
    const int base = ts.num_vars();
    if (depth > 0) {
      std::vector<std::string> names;
      std::vector<FormulaRef> nexts;
      FormulaRef not_dis = f_not(dis);
      for (int j = 1; j <= depth; ++j)
        names.push_back("$p" + std::to_string(k) + "_" + std::to_string(j));
      nexts.push_back(f_and(ante, not_dis));
      for (int j = 2; j <= depth; ++j)
        nexts.push_back(f_and(f_state(base + j - 2), not_dis));
      ts = ts.extend(names, nexts,
                     std::vector<bool>(static_cast<size_t>(depth), false));
      monitor_vars.insert(monitor_vars.end(), names.begin(), names.end());
    }

    // Due obligations must hold unless the disable signal samples high now.
    std::vector<FormulaRef> due;
    for (const auto& [t, cond] : obligations) {
      FormulaRef fired =
          t == 0 ? ante : FormulaRef(f_state(base + t - 1));
      due.push_back(f_or(f_not(fired), cond));
    }
    safes.push_back(f_or(dis, f_and(std::move(due))));
  }

  return CompiledProperty{std::move(ts), f_and(std::move(safes)),
                          std::move(monitor_vars)};
}

CompiledProperty compile_property(const PropRef& prop,
                                  const ElaboratedDesign& design,
                                  const CompileOptions& opts) {
  return compile_group({prop}, design, opts);
}

}  // namespace inductor
