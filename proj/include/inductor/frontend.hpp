// SPDX-License-Identifier: Apache-2.0
//
// HDL frontend: parsing of the supported SystemVerilog subset, property
// parsing, elaboration to a bit-level transition system, and compilation of
// temporal properties into monitor-extended systems with a safe-state
// predicate. The accepted grammar is documented in docs/grammar.md.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "inductor/hdl_ast.hpp"
#include "inductor/transition_system.hpp"

namespace inductor {

// --- Parsing --------------------------------------------------------------

// Parses one module. Throws SyntaxError, UnsupportedConstruct,
// NonAsciiOperator.
DesignAst parse_design(const std::string& text);

// Parses a single property: either a bare body or a full
// `property name; ... endproperty` block. Bare identifiers that match an
// entry of `symbols` become named references; `and` operands that resolve
// neither to a symbol nor stand alone as boolean expressions raise
// UnknownSignal. A repair pre-pass rewrites known Unicode operator glyphs;
// any remaining non-ASCII byte raises NonAsciiOperator.
PropRef parse_property(const std::string& text,
                       const PropertySymbols* symbols = nullptr);

// Parses a property file: any number of `property … endproperty` blocks
// and/or one bare expression per nonempty line. Entries keep file order;
// unnamed entries get names "p<index>". Later entries may reference earlier
// ones by name.
using NamedProperty = std::pair<std::string, PropRef>;
std::vector<NamedProperty> parse_property_file(
    const std::string& text, const PropertySymbols* symbols = nullptr);

// Pretty-printer; parse_property(property_str(p)) is structurally equal to
// p for every parseable property.
std::string property_str(const PropRef& prop);
std::string expr_str(const ExprRef& expr);

// Structural equality ignoring source positions.
bool expr_equal(const ExprRef& a, const ExprRef& b);
bool prop_equal(const PropRef& a, const PropRef& b);

// --- Elaboration ----------------------------------------------------------

struct ElaboratedDesign {
  TransitionSystem ts;
  // Every declared signal name mapped to its bits over `ts` (LSB first):
  // registers to state leaves, inputs to input leaves, wires to their
  // defining logic, parameters to constants.
  std::map<std::string, std::vector<FormulaRef>> views;
  PropertySymbols properties;               // by name
  std::vector<std::string> property_order;  // declaration order
  std::string clock;
};

// Builds the transition system: tasks inlined, blocking assignments
// resolved by in-order substitution, nonblocking assignments becoming
// next-state equations, unassigned registers holding their value. A leading
// `if (rst)`/`if (reset)` branch on a bare input defines Init (exactly the
// constant assignments it makes); without one, Init is unconstrained.
// Throws ElaborationError, UnknownSignal, UnsupportedConstruct.
ElaboratedDesign elaborate(const DesignAst& ast);

// --- Property compilation ---------------------------------------------

struct CompiledProperty {
  TransitionSystem ts;  // design system extended with monitor bits
  FormulaRef safe;      // AG safe on `ts` iff the property holds
  std::vector<std::string> monitor_vars;
};

struct CompileOptions {
  int temporal_depth_cap = 4;  // max chained delay per implication
};

// Compiles one property (or several, conjoined) against an elaborated
// design. Temporal depth d adds d monitor bits that pipeline the
// antecedent; `disable iff` clears pending obligations and makes the safe
// predicate vacuously true while the disable signal samples high.
CompiledProperty compile_property(const PropRef& prop,
                                  const ElaboratedDesign& design,
                                  const CompileOptions& opts = {});
CompiledProperty compile_group(const std::vector<PropRef>& props,
                               const ElaboratedDesign& design,
                               const CompileOptions& opts = {});

}  // namespace inductor
