// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "inductor/checker.hpp"
#include "inductor/diagnostics.hpp"

namespace inductor {

void Cnf::add_clause(std::vector<int> lits) {
  for (int lit : lits) {
    int v = std::abs(lit);
    if (lit == 0 || v > num_vars)
      throw Error("cnf: literal " + std::to_string(lit) +
                  " out of range for " + std::to_string(num_vars) +
                  " variables");
  }
  clauses.push_back(std::move(lits));
}

Encoder::Encoder(const TransitionSystem& ts, int last_frame)
    : ts_(ts), last_frame_(last_frame) {
  if (last_frame < 0) throw Error("encoder: negative frame count");
  // Frame variables first, in a fixed order, so numbering is independent
  // of what gets encoded later: for each frame, state bits then input bits.
  for (int f = 0; f <= last_frame; ++f)
    for (int i = 0; i < ts.num_vars() + ts.num_inputs(); ++i) cnf_.add_var();
}

int Encoder::state_literal(int frame, int var) const {
  return 1 + frame * (ts_.num_vars() + ts_.num_inputs()) + var;
}

int Encoder::input_literal(int frame, int var) const {
  return 1 + frame * (ts_.num_vars() + ts_.num_inputs()) + ts_.num_vars() +
         var;
}

int Encoder::constant(bool value) {
  if (true_var_ == 0) {
    true_var_ = cnf_.add_var();
    cnf_.add_clause({true_var_});
  }
  return value ? true_var_ : -true_var_;
}

int Encoder::encode(const FormulaRef& f, int frame) {
  if (frame < 0 || frame > last_frame_)
    throw Error("encoder: frame out of range");
  if (f->op == Formula::Op::Const) return constant(f->value);
  if (f->op == Formula::Op::Var) {
    const VarRef& v = f->var;
    if (v.kind == VarRef::Kind::Input) return input_literal(frame, v.index);
    if (!v.primed) return state_literal(frame, v.index);
    if (frame + 1 > last_frame_)
      throw Error("encoder: primed reference in the last frame");
    return state_literal(frame + 1, v.index);
  }
  auto key = std::make_pair(f.get(), frame);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;

  if (f->op == Formula::Op::Not) {
    int lit = -encode(f->args[0], frame);
    memo_[key] = lit;
    return lit;
  }

  std::vector<int> args;
  args.reserve(f->args.size());
  for (const FormulaRef& a : f->args) args.push_back(encode(a, frame));
  int v = cnf_.add_var();
  switch (f->op) {
    case Formula::Op::And: {
      std::vector<int> big{v};
      for (int a : args) {
        cnf_.add_clause({-v, a});
        big.push_back(-a);
      }
      cnf_.add_clause(std::move(big));
      break;
    }
    case Formula::Op::Or: {
      std::vector<int> big{-v};
      for (int a : args) {
        cnf_.add_clause({v, -a});
        big.push_back(a);
      }
      cnf_.add_clause(std::move(big));
      break;
    }
    case Formula::Op::Implies:
      cnf_.add_clause({-v, -args[0], args[1]});
      cnf_.add_clause({v, args[0]});
      cnf_.add_clause({v, -args[1]});
      break;
    case Formula::Op::Iff:
      cnf_.add_clause({-v, -args[0], args[1]});
      cnf_.add_clause({-v, args[0], -args[1]});
      cnf_.add_clause({v, args[0], args[1]});
      cnf_.add_clause({v, -args[0], -args[1]});
      break;
    case Formula::Op::Ite:
      cnf_.add_clause({-v, -args[0], args[1]});
      cnf_.add_clause({-v, args[0], args[2]});
      cnf_.add_clause({v, -args[0], -args[1]});
      cnf_.add_clause({v, args[0], -args[2]});
      break;
    default:
      throw Error("encoder: unexpected operator");
  }
  memo_[key] = v;
  return v;
}

void Encoder::assert_at(const FormulaRef& f, int frame) {
  if (f->op == Formula::Op::And) {
    for (const FormulaRef& a : f->args) assert_at(a, frame);
    return;
  }
  if (f->is_const_true()) {
    constant(true);  // keep the pinned witness so the clause set is nonempty
    return;
  }
  if (f->is_const_false()) {
    cnf_.clauses.push_back({});
    return;
  }
  cnf_.add_clause({encode(f, frame)});
}

Cnf bitblast(const TransitionSystem& ts, const FormulaRef& f,
             int last_frame) {
  Encoder enc(ts, last_frame);
  enc.assert_at(f, 0);
  return enc.take();
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const std::vector<int>& clause : cnf.clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

}  // namespace inductor
