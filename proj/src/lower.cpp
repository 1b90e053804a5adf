// SPDX-License-Identifier: Apache-2.0

#include "lower.hpp"

#include <algorithm>

#include "inductor/diagnostics.hpp"

namespace inductor {

namespace {

int minWidth(uint64_t value) {
  int w = 1;
  while (value >> w) ++w;
  return w;
}

// Zero-extends (or keeps) bits to exactly `width`.
Bits extendTo(Bits bits, size_t width) {
  while (bits.size() < width) bits.push_back(f_false());
  return bits;
}

FormulaRef orReduce(const Bits& bits) {
  std::vector<FormulaRef> args(bits.begin(), bits.end());
  return f_or(std::move(args));
}

// Ripple adder: sum = a + b + carry_in, truncated to a's width (callers
// pre-extend both sides to the result width).
Bits rippleAdd(const Bits& a, const Bits& b, FormulaRef carry) {
  Bits sum(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    sum[i] = f_xor(f_xor(a[i], b[i]), carry);
    // carry-out: majority(a, b, cin)
    carry = f_or(f_and(a[i], b[i]), f_and(carry, f_xor(a[i], b[i])));
  }
  return sum;
}

// Unsigned a < b over equal widths: borrow chain from the LSB up.
FormulaRef rippleLess(const Bits& a, const Bits& b) {
  FormulaRef lt = f_false();
  for (size_t i = 0; i < a.size(); ++i)
    lt = f_or(f_and(f_not(a[i]), b[i]), f_and(f_iff(a[i], b[i]), lt));
  return lt;
}

FormulaRef bitsEqual(const Bits& a, const Bits& b) {
  std::vector<FormulaRef> eq;
  for (size_t i = 0; i < a.size(); ++i) eq.push_back(f_iff(a[i], b[i]));
  return f_and(std::move(eq));
}

}  // namespace

Bits const_bits(uint64_t value, int width) {
  Bits bits;
  for (int i = 0; i < width; ++i) bits.push_back(f_const((value >> i) & 1));
  return bits;
}

bool const_value(const ExprRef& e, const Env& env, uint64_t* out) {
  Bits bits = lower_expr(e, env);
  uint64_t value = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]->is_const()) return false;
    if (bits[i]->value) value |= uint64_t{1} << i;
  }
  *out = value;
  return true;
}

Bits lower_expr(const ExprRef& e, const Env& env) {
  switch (e->kind) {
    case Expr::Kind::Number: {
      int width = e->number_width > 0 ? e->number_width : minWidth(e->number);
      return const_bits(e->number, width);
    }

    case Expr::Kind::Ident: {
      auto it = env.find(e->ident);
      if (it == env.end()) throw UnknownSignal(e->ident);
      return it->second;
    }

    case Expr::Kind::Select: {
      auto it = env.find(e->ident);
      if (it == env.end()) throw UnknownSignal(e->ident);
      uint64_t idx = 0;
      if (!const_value(e->index, env, &idx))
        throw UnsupportedConstruct(e->pos, "non-constant bit select");
      if (idx >= it->second.size())
        throw UnsupportedConstruct(
            e->pos, "bit index " + std::to_string(idx) + " out of range for " +
                        e->ident);
      return {it->second[idx]};
    }

    case Expr::Kind::Unary: {
      Bits a = lower_expr(e->lhs, env);
      if (e->op == Expr::Op::LogicNot) return {f_not(orReduce(a))};
      // BitNot: elementwise at the operand's own width.
      Bits out(a.size());
      for (size_t i = 0; i < a.size(); ++i) out[i] = f_not(a[i]);
      return out;
    }

    case Expr::Kind::Binary:
      break;
  }

  Bits a = lower_expr(e->lhs, env);
  Bits b = lower_expr(e->rhs, env);
  const size_t w = std::max(a.size(), b.size());

  switch (e->op) {
    case Expr::Op::LogicAnd:
      return {f_and(orReduce(a), orReduce(b))};
    case Expr::Op::LogicOr:
      return {f_or(orReduce(a), orReduce(b))};
    case Expr::Op::Implies:
      return {f_implies(orReduce(a), orReduce(b))};
    case Expr::Op::Iff:
      return {f_iff(orReduce(a), orReduce(b))};

    case Expr::Op::BitAnd:
    case Expr::Op::BitOr:
    case Expr::Op::BitXor: {
      a = extendTo(std::move(a), w);
      b = extendTo(std::move(b), w);
      Bits out(w);
      for (size_t i = 0; i < w; ++i) {
        if (e->op == Expr::Op::BitAnd)
          out[i] = f_and(a[i], b[i]);
        else if (e->op == Expr::Op::BitOr)
          out[i] = f_or(a[i], b[i]);
        else
          out[i] = f_xor(a[i], b[i]);
      }
      return out;
    }

    case Expr::Op::Add:
      return rippleAdd(extendTo(std::move(a), w), extendTo(std::move(b), w),
                       f_false());
    case Expr::Op::Sub: {
      // a - b == a + ~b + 1, truncated.
      Bits nb = extendTo(std::move(b), w);
      for (auto& bit : nb) bit = f_not(bit);
      return rippleAdd(extendTo(std::move(a), w), nb, f_true());
    }

    case Expr::Op::Eq:
      return {bitsEqual(extendTo(std::move(a), w), extendTo(std::move(b), w))};
    case Expr::Op::Ne:
      return {f_not(
          bitsEqual(extendTo(std::move(a), w), extendTo(std::move(b), w)))};
    case Expr::Op::Lt:
      return {rippleLess(extendTo(std::move(a), w), extendTo(std::move(b), w))};
    case Expr::Op::Gt:
      return {rippleLess(extendTo(std::move(b), w), extendTo(std::move(a), w))};
    case Expr::Op::Le:
      return {f_not(
          rippleLess(extendTo(std::move(b), w), extendTo(std::move(a), w)))};
    case Expr::Op::Ge:
      return {f_not(
          rippleLess(extendTo(std::move(a), w), extendTo(std::move(b), w)))};

    default:
      throw Error("internal: unhandled operator in lowering");
  }
}

FormulaRef lower_bool(const ExprRef& e, const Env& env) {
  Bits bits = lower_expr(e, env);
  std::vector<FormulaRef> args(bits.begin(), bits.end());
  return f_or(std::move(args));
}

}  // namespace inductor
