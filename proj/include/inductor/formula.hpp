// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "inductor/diagnostics.hpp"

namespace inductor {

// A reference to a bit of a transition system: either a state variable
// (optionally primed, i.e. next-state) or a free input. Indices point into
// the owning system's variable tables.
struct VarRef {
  enum class Kind : uint8_t { State, Input };
  Kind kind = Kind::State;
  int index = 0;
  bool primed = false;  // only meaningful for state variables

  bool operator==(const VarRef&) const = default;
};

struct Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Immutable boolean expression tree. Shared subtrees are allowed (the tree
// is really a DAG); nodes are never mutated after construction, so
// formulas can be shared freely across threads.
struct Formula {
  enum class Op : uint8_t { Const, Var, Not, And, Or, Implies, Iff, Ite };

  Op op = Op::Const;
  bool value = false;            // Op::Const
  VarRef var;                    // Op::Var
  std::vector<FormulaRef> args;  // operands; And/Or are n-ary

  bool is_const() const { return op == Op::Const; }
  bool is_const_true() const { return op == Op::Const && value; }
  bool is_const_false() const { return op == Op::Const && !value; }
};

// Constructors. And/Or fold constants and flatten nested nodes of the same
// operator; Not folds double negation and constants.
FormulaRef f_const(bool value);
FormulaRef f_true();
FormulaRef f_false();
FormulaRef f_state(int index, bool primed = false);
FormulaRef f_input(int index);
FormulaRef f_var(VarRef v);
FormulaRef f_not(FormulaRef a);
FormulaRef f_and(FormulaRef a, FormulaRef b);
FormulaRef f_and(std::vector<FormulaRef> args);
FormulaRef f_or(FormulaRef a, FormulaRef b);
FormulaRef f_or(std::vector<FormulaRef> args);
FormulaRef f_implies(FormulaRef a, FormulaRef b);
FormulaRef f_iff(FormulaRef a, FormulaRef b);
FormulaRef f_xor(FormulaRef a, FormulaRef b);
FormulaRef f_ite(FormulaRef c, FormulaRef t, FormulaRef e);

// Structural equality (by shape, not by pointer).
bool f_equal(const FormulaRef& a, const FormulaRef& b);

// Bit valuation over a variable table; index i of the table maps to bit i.
// Packed into 64-bit words, sized at construction.
class Valuation {
public:
  Valuation() = default;
  explicit Valuation(int width) : width_(width), words_((width + 63) / 64, 0) {}
  // Convenience for systems of at most 64 bits.
  Valuation(int width, uint64_t bits) : Valuation(width) {
    if (!words_.empty()) words_[0] = bits;
  }

  int width() const { return width_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  // Low 64 bits, for packed-state bookkeeping on small systems.
  uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }
  void set_low_bits(uint64_t bits) {
    if (words_.empty()) return;
    uint64_t mask = width_ >= 64 ? ~uint64_t{0} : (uint64_t{1} << width_) - 1;
    words_[0] = bits & mask;
  }

  bool operator==(const Valuation&) const = default;

private:
  int width_ = 0;
  std::vector<uint64_t> words_;
};

// Evaluates a formula under the given valuations. `next` must be present
// when the formula contains primed references, `inputs` when it contains
// input references; otherwise UnboundVariable is thrown. Pure and total on
// well-formed arguments.
bool eval(const Formula& f, const Valuation& current,
          const std::optional<Valuation>& next = std::nullopt,
          const std::optional<Valuation>& inputs = std::nullopt);

inline bool eval(const FormulaRef& f, const Valuation& current,
                 const std::optional<Valuation>& next = std::nullopt,
                 const std::optional<Valuation>& inputs = std::nullopt) {
  return eval(*f, current, next, inputs);
}

// Renders the formula with the supplied naming callback, mostly for
// diagnostics and golden tests.
std::string f_str(const FormulaRef& f,
                  const std::vector<std::string>& state_names,
                  const std::vector<std::string>& input_names);

}  // namespace inductor
