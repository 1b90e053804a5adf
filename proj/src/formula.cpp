// SPDX-License-Identifier: Apache-2.0
#include "inductor/formula.hpp"

#include <algorithm>

namespace inductor {

namespace {

FormulaRef make(Formula f) {
  return std::make_shared<const Formula>(std::move(f));
}

const FormulaRef kTrue = make({.op = Formula::Op::Const, .value = true});
const FormulaRef kFalse = make({.op = Formula::Op::Const, .value = false});

}  // namespace

FormulaRef f_const(bool value) { return value ? kTrue : kFalse; }
FormulaRef f_true() { return kTrue; }
FormulaRef f_false() { return kFalse; }

FormulaRef f_var(VarRef v) {
  Formula f;
  f.op = Formula::Op::Var;
  f.var = v;
  return make(std::move(f));
}

FormulaRef f_state(int index, bool primed) {
  return f_var({VarRef::Kind::State, index, primed});
}

FormulaRef f_input(int index) {
  return f_var({VarRef::Kind::Input, index, false});
}

FormulaRef f_not(FormulaRef a) {
  if (a->is_const()) return f_const(!a->value);
  if (a->op == Formula::Op::Not) return a->args[0];
  Formula f;
  f.op = Formula::Op::Not;
  f.args = {std::move(a)};
  return make(std::move(f));
}

static FormulaRef nary(Formula::Op op, std::vector<FormulaRef> args) {
  const bool is_and = op == Formula::Op::And;
  const FormulaRef unit = is_and ? kTrue : kFalse;
  const FormulaRef zero = is_and ? kFalse : kTrue;
  std::vector<FormulaRef> kept;
  kept.reserve(args.size());
  for (auto& a : args) {
    if (a->is_const()) {
      if (a->value == zero->value) return zero;
      continue;  // drop unit
    }
    if (a->op == op) {
      for (const auto& sub : a->args) kept.push_back(sub);
    } else {
      kept.push_back(std::move(a));
    }
  }
  if (kept.empty()) return unit;
  if (kept.size() == 1) return kept[0];
  Formula f;
  f.op = op;
  f.args = std::move(kept);
  return make(std::move(f));
}

FormulaRef f_and(FormulaRef a, FormulaRef b) {
  return nary(Formula::Op::And, {std::move(a), std::move(b)});
}
FormulaRef f_and(std::vector<FormulaRef> args) {
  return nary(Formula::Op::And, std::move(args));
}
FormulaRef f_or(FormulaRef a, FormulaRef b) {
  return nary(Formula::Op::Or, {std::move(a), std::move(b)});
}
FormulaRef f_or(std::vector<FormulaRef> args) {
  return nary(Formula::Op::Or, std::move(args));
}

FormulaRef f_implies(FormulaRef a, FormulaRef b) {
  if (a->is_const()) return a->value ? b : kTrue;
  if (b->is_const()) return b->value ? kTrue : f_not(a);
  Formula f;
  f.op = Formula::Op::Implies;
  f.args = {std::move(a), std::move(b)};
  return make(std::move(f));
}

FormulaRef f_iff(FormulaRef a, FormulaRef b) {
  if (a->is_const()) return a->value ? b : f_not(b);
  if (b->is_const()) return b->value ? a : f_not(a);
  Formula f;
  f.op = Formula::Op::Iff;
  f.args = {std::move(a), std::move(b)};
  return make(std::move(f));
}

FormulaRef f_xor(FormulaRef a, FormulaRef b) {
  return f_not(f_iff(std::move(a), std::move(b)));
}

FormulaRef f_ite(FormulaRef c, FormulaRef t, FormulaRef e) {
  if (c->is_const()) return c->value ? t : e;
  if (t == e) return t;
  if (t->is_const() && e->is_const()) return t->value ? c : f_not(c);
  Formula f;
  f.op = Formula::Op::Ite;
  f.args = {std::move(c), std::move(t), std::move(e)};
  return make(std::move(f));
}

bool f_equal(const FormulaRef& a, const FormulaRef& b) {
  if (a == b) return true;
  if (a->op != b->op) return false;
  switch (a->op) {
    case Formula::Op::Const:
      return a->value == b->value;
    case Formula::Op::Var:
      return a->var == b->var;
    default:
      if (a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!f_equal(a->args[i], b->args[i])) return false;
      return true;
  }
}

bool eval(const Formula& f, const Valuation& current,
          const std::optional<Valuation>& next,
          const std::optional<Valuation>& inputs) {
  switch (f.op) {
    case Formula::Op::Const:
      return f.value;
    case Formula::Op::Var: {
      const VarRef& v = f.var;
      if (v.kind == VarRef::Kind::Input) {
        if (!inputs) throw UnboundVariable("input #" + std::to_string(v.index));
        if (v.index >= inputs->width())
          throw UnboundVariable("input #" + std::to_string(v.index));
        return inputs->get(v.index);
      }
      if (v.primed) {
        if (!next)
          throw UnboundVariable("primed state #" + std::to_string(v.index));
        if (v.index >= next->width())
          throw UnboundVariable("primed state #" + std::to_string(v.index));
        return next->get(v.index);
      }
      if (v.index >= current.width())
        throw UnboundVariable("state #" + std::to_string(v.index));
      return current.get(v.index);
    }
    case Formula::Op::Not:
      return !eval(*f.args[0], current, next, inputs);
    case Formula::Op::And:
      for (const auto& a : f.args)
        if (!eval(*a, current, next, inputs)) return false;
      return true;
    case Formula::Op::Or:
      for (const auto& a : f.args)
        if (eval(*a, current, next, inputs)) return true;
      return false;
    case Formula::Op::Implies:
      return !eval(*f.args[0], current, next, inputs) ||
             eval(*f.args[1], current, next, inputs);
    case Formula::Op::Iff:
      return eval(*f.args[0], current, next, inputs) ==
             eval(*f.args[1], current, next, inputs);
    case Formula::Op::Ite:
      return eval(*f.args[0], current, next, inputs)
                 ? eval(*f.args[1], current, next, inputs)
                 : eval(*f.args[2], current, next, inputs);
  }
  return false;  // unreachable
}

static void render(const FormulaRef& f, const std::vector<std::string>& sn,
                   const std::vector<std::string>& in, std::string& out) {
  switch (f->op) {
    case Formula::Op::Const:
      out += f->value ? "true" : "false";
      return;
    case Formula::Op::Var: {
      const VarRef& v = f->var;
      if (v.kind == VarRef::Kind::Input) {
        out += v.index < static_cast<int>(in.size())
                   ? in[v.index]
                   : "in" + std::to_string(v.index);
      } else {
        out += v.index < static_cast<int>(sn.size())
                   ? sn[v.index]
                   : "v" + std::to_string(v.index);
        if (v.primed) out += "'";
      }
      return;
    }
    case Formula::Op::Not:
      out += "!";
      render(f->args[0], sn, in, out);
      return;
    default: {
      const char* sep = nullptr;
      switch (f->op) {
        case Formula::Op::And: sep = " & "; break;
        case Formula::Op::Or: sep = " | "; break;
        case Formula::Op::Implies: sep = " -> "; break;
        case Formula::Op::Iff: sep = " <-> "; break;
        default: break;
      }
      out += "(";
      if (f->op == Formula::Op::Ite) {
        render(f->args[0], sn, in, out);
        out += " ? ";
        render(f->args[1], sn, in, out);
        out += " : ";
        render(f->args[2], sn, in, out);
      } else {
        for (std::size_t i = 0; i < f->args.size(); ++i) {
          if (i) out += sep;
          render(f->args[i], sn, in, out);
        }
      }
      out += ")";
      return;
    }
  }
}

std::string f_str(const FormulaRef& f, const std::vector<std::string>& sn,
                  const std::vector<std::string>& in) {
  std::string out;
  render(f, sn, in, out);
  return out;
}

}  // namespace inductor
