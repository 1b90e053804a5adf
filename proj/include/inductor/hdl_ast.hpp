// SPDX-License-Identifier: Apache-2.0
//
// Abstract syntax for the supported SystemVerilog subset and for safety
// properties. docs/grammar.md is the authoritative description of what the
// parsers accept; these types mirror it one to one.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "inductor/diagnostics.hpp"

namespace inductor {

// --- Expressions (shared by design logic and the property boolean layer) --

struct Expr;
using ExprRef = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind : uint8_t { Number, Ident, Select, Unary, Binary };
  // Unary: LogicNot (!), BitNot (~). Binary ops follow Verilog precedence;
  // Implies (->) and Iff (<->) only appear in properties.
  enum class Op : uint8_t {
    None,
    LogicNot,
    BitNot,
    BitAnd,
    BitOr,
    BitXor,
    LogicAnd,
    LogicOr,
    Add,
    Sub,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    Implies,
    Iff,
  };

  Kind kind = Kind::Number;
  Op op = Op::None;
  uint64_t number = 0;  // Number: value
  int number_width = 0; // Number: declared size, 0 when unsized
  std::string ident;    // Ident / Select: signal name
  ExprRef index;        // Select: constant bit index
  ExprRef lhs, rhs;     // Unary uses lhs only
  SourcePos pos;
};

ExprRef e_number(uint64_t value, int width, SourcePos pos);
ExprRef e_ident(std::string name, SourcePos pos);
ExprRef e_select(std::string name, ExprRef index, SourcePos pos);
ExprRef e_unary(Expr::Op op, ExprRef a, SourcePos pos);
ExprRef e_binary(Expr::Op op, ExprRef a, ExprRef b, SourcePos pos);

// --- Statements ----------------------------------------------------------

struct Stmt;
using StmtRef = std::shared_ptr<const Stmt>;

struct Stmt {
  enum class Kind : uint8_t { Block, If, Blocking, Nonblocking, TaskCall };

  Kind kind = Kind::Block;
  std::vector<StmtRef> body;  // Block
  ExprRef cond;               // If
  StmtRef then_branch;        // If
  StmtRef else_branch;        // If, may be null
  std::string lhs;            // assignments: target register
  ExprRef lhs_index;          // assignments: constant bit index, may be null
  ExprRef rhs;                // assignments
  std::string callee;         // TaskCall
  SourcePos pos;
};

// --- Properties -----------------------------------------------------------

struct PropertyAst;
using PropRef = std::shared_ptr<const PropertyAst>;

// One timed element of a consequent sequence: `delay` cycles after the
// previous element (0 only for the first), `cond` must hold.
struct SeqElem {
  int delay = 0;
  ExprRef cond;
};

struct PropertyAst {
  enum class Kind : uint8_t {
    Bool,         // plain boolean expression
    Implication,  // antecedent |-> sequence
    And,          // property conjunction
    Named,        // reference to a previously declared property
  };

  Kind kind = Kind::Bool;
  ExprRef expr;                // Bool: body; Implication: antecedent
  std::vector<SeqElem> sequence;  // Implication consequent
  PropRef lhs, rhs;            // And
  std::string name;            // Named
  // Unit-level clauses; only meaningful on the root of a property.
  std::optional<std::string> clock;  // @(posedge <clock>)
  ExprRef disable;                   // disable iff (<expr>), may be null
  SourcePos pos;
};

// Named properties visible to `parse_property` for Named references.
using PropertySymbols = std::map<std::string, PropRef>;

// --- Design ---------------------------------------------------------------

struct Port {
  enum class Dir : uint8_t { Input, Output };
  std::string name;
  Dir dir = Dir::Input;
  int width = 1;
  SourcePos pos;
};

struct RegDecl {
  std::string name;
  int width = 1;  // [msb:0] declarations; width = msb+1
  SourcePos pos;
};

struct WireDecl {
  std::string name;
  int width = 1;
  SourcePos pos;
};

struct TaskDecl {
  std::string name;
  StmtRef body;
  SourcePos pos;
};

struct AlwaysBlock {
  std::string clock;  // @(posedge <clock>)
  StmtRef body;
  SourcePos pos;
};

struct ContAssign {
  std::string lhs;
  ExprRef rhs;
  SourcePos pos;
};

struct PropertyDecl {
  std::string name;
  PropRef prop;
  SourcePos pos;
};

struct DesignAst {
  std::string name;
  std::vector<Port> ports;
  std::vector<RegDecl> regs;
  std::vector<WireDecl> wires;
  std::map<std::string, int64_t> params;  // folded to constants at parse
  std::vector<TaskDecl> tasks;
  std::vector<AlwaysBlock> always_blocks;
  std::vector<ContAssign> assigns;
  std::vector<PropertyDecl> properties;  // in declaration order
};

}  // namespace inductor
