// SPDX-License-Identifier: Apache-2.0
//
// Internal helper: lowering of HDL expressions to vectors of boolean
// formulas (LSB first). Shared by elaboration and property compilation.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "inductor/formula.hpp"
#include "inductor/hdl_ast.hpp"

namespace inductor {

using Bits = std::vector<FormulaRef>;
using Env = std::map<std::string, Bits>;

// Lowers an expression under the given signal environment. Comparisons and
// logical operators yield one bit; arithmetic is ripple logic at the wider
// operand's width. Throws UnknownSignal for unmapped identifiers and
// UnsupportedConstruct for non-constant or out-of-range bit selects.
Bits lower_expr(const ExprRef& e, const Env& env);

// Lowers to a single bit, OR-reducing multi-bit values (Verilog truthiness).
FormulaRef lower_bool(const ExprRef& e, const Env& env);

// Constant bits for a literal value at the given width.
Bits const_bits(uint64_t value, int width);

// Evaluates an expression that must fold to a constant (parameters and
// literals only); used for bit indices. Returns false if not constant.
bool const_value(const ExprRef& e, const Env& env, uint64_t* out);

}  // namespace inductor
