// SPDX-License-Identifier: Apache-2.0
//
// Internal parsing helpers: token cursor with backtracking and the
// precedence-climbing expression parser shared by the design and property
// grammars.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inductor/hdl_ast.hpp"
#include "inductor/lexer.hpp"

namespace inductor {

class TokenStream {
 public:
  explicit TokenStream(const std::string& text) : toks_(tokenize(text)) {}

  const Token& peek(size_t ahead = 0) const {
    size_t i = i_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }
  bool atEof() const { return peek().kind == Token::Kind::Eof; }
  SourcePos pos() const { return peek().pos; }

  bool atPunct(const char* p, size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::Punct && t.text == p;
  }
  bool atKeyword(const char* kw, size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::Ident && t.text == kw;
  }
  bool acceptPunct(const char* p) {
    if (!atPunct(p)) return false;
    next();
    return true;
  }
  bool acceptKeyword(const char* kw) {
    if (!atKeyword(kw)) return false;
    next();
    return true;
  }
  void expectPunct(const char* p) {
    if (!acceptPunct(p)) throw SyntaxError(pos(), std::string("'") + p + "'");
  }
  void expectKeyword(const char* kw) {
    if (!acceptKeyword(kw))
      throw SyntaxError(pos(), std::string("'") + kw + "'");
  }
  std::string expectIdent(const char* what = "identifier") {
    if (peek().kind != Token::Kind::Ident) throw SyntaxError(pos(), what);
    return next().text;
  }
  uint64_t expectNumber(int* width = nullptr) {
    if (peek().kind != Token::Kind::Number)
      throw SyntaxError(pos(), "number");
    const Token& t = next();
    if (width) *width = t.width;
    return t.value;
  }

  size_t save() const { return i_; }
  void restore(size_t s) { i_ = s; }

 private:
  std::vector<Token> toks_;
  size_t i_ = 0;
};

// Parses an expression. `property_ops` additionally enables the lowest-
// precedence implication (->, right-associative) and equivalence (<->)
// connectives used by the property boolean layer.
ExprRef parse_expr(TokenStream& ts, bool property_ops);

// Parses one property unit: optional @(posedge <clk>), optional
// disable iff (<expr>), then the property body. Consumes up to (not
// including) the terminator the caller expects (';', endproperty, EOF).
PropRef parse_property_unit(TokenStream& ts, const PropertySymbols* symbols);

}  // namespace inductor
