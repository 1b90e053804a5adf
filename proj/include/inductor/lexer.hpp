// SPDX-License-Identifier: Apache-2.0
//
// Shared tokenizer for the design and property parsers. Comments and
// whitespace are skipped (with line/column tracking); identifiers,
// number literals (decimal and sized/unsized 'b/'d/'h forms) and
// multi-character operators come back as single tokens.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inductor/diagnostics.hpp"

namespace inductor {

struct Token {
  enum class Kind : uint8_t { Ident, Number, Punct, Eof };

  Kind kind = Kind::Eof;
  std::string text;    // identifier name or operator spelling
  uint64_t value = 0;  // Number: numeric value
  int width = 0;       // Number: declared size, 0 when unsized
  SourcePos pos;
};

// Tokenizes the whole input eagerly. Throws SyntaxError on malformed
// literals and NonAsciiOperator on bytes outside ASCII (with a repair hint
// when the glyph is one `repair_non_ascii` knows how to rewrite).
std::vector<Token> tokenize(const std::string& text);

// Rewrites a fixed table of Unicode logic glyphs (⇔, →, ¬, ∧, ∨, ≠, curly
// quotes, non-breaking spaces, …) to their ASCII operator spellings before
// parsing. Returns the rewritten text and a human-readable note per repair.
struct RepairResult {
  std::string text;
  std::vector<std::string> notes;  // e.g. "1:4: replaced '⇔' with '<->'"
};
RepairResult repair_non_ascii(const std::string& text);

}  // namespace inductor
