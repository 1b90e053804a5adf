// SPDX-License-Identifier: Apache-2.0

#include <memory>

#include "parser_util.hpp"

namespace inductor {

ExprRef e_number(uint64_t value, int width, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Number;
  e->number = value;
  e->number_width = width;
  e->pos = pos;
  return e;
}

ExprRef e_ident(std::string name, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Ident;
  e->ident = std::move(name);
  e->pos = pos;
  return e;
}

ExprRef e_select(std::string name, ExprRef index, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Select;
  e->ident = std::move(name);
  e->index = std::move(index);
  e->pos = pos;
  return e;
}

ExprRef e_unary(Expr::Op op, ExprRef a, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Unary;
  e->op = op;
  e->lhs = std::move(a);
  e->pos = pos;
  return e;
}

ExprRef e_binary(Expr::Op op, ExprRef a, ExprRef b, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Binary;
  e->op = op;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  e->pos = pos;
  return e;
}

namespace {

struct OpInfo {
  Expr::Op op;
  int prec;          // larger binds tighter
  bool right_assoc;
};

// Binary operator lookup; follows Verilog precedence, with the property
// connectives below everything else.
bool binaryOp(const TokenStream& ts, bool property_ops, OpInfo* out) {
  const Token& t = ts.peek();
  if (t.kind != Token::Kind::Punct) return false;
  const std::string& s = t.text;
  if (property_ops && s == "<->") { *out = {Expr::Op::Iff, 1, false}; return true; }
  if (property_ops && s == "->") { *out = {Expr::Op::Implies, 2, true}; return true; }
  if (s == "||") { *out = {Expr::Op::LogicOr, 3, false}; return true; }
  if (s == "&&") { *out = {Expr::Op::LogicAnd, 4, false}; return true; }
  if (s == "|") { *out = {Expr::Op::BitOr, 5, false}; return true; }
  if (s == "^") { *out = {Expr::Op::BitXor, 6, false}; return true; }
  if (s == "&") { *out = {Expr::Op::BitAnd, 7, false}; return true; }
  if (s == "==") { *out = {Expr::Op::Eq, 8, false}; return true; }
  if (s == "!=") { *out = {Expr::Op::Ne, 8, false}; return true; }
  if (s == "<") { *out = {Expr::Op::Lt, 9, false}; return true; }
  if (s == "<=") { *out = {Expr::Op::Le, 9, false}; return true; }
  if (s == ">") { *out = {Expr::Op::Gt, 9, false}; return true; }
  if (s == ">=") { *out = {Expr::Op::Ge, 9, false}; return true; }
  if (s == "+") { *out = {Expr::Op::Add, 10, false}; return true; }
  if (s == "-") { *out = {Expr::Op::Sub, 10, false}; return true; }
  return false;
}

ExprRef parsePrimary(TokenStream& ts, bool property_ops) {
  SourcePos at = ts.pos();
  const Token& t = ts.peek();

  if (t.kind == Token::Kind::Number) {
    int width = 0;
    uint64_t value = ts.expectNumber(&width);
    return e_number(value, width, at);
  }
  if (t.kind == Token::Kind::Ident) {
    std::string name = ts.next().text;
    if (ts.acceptPunct("[")) {
      ExprRef index = parse_expr(ts, property_ops);
      if (ts.acceptPunct(":"))
        throw UnsupportedConstruct(at, "part select");
      ts.expectPunct("]");
      return e_select(std::move(name), std::move(index), at);
    }
    return e_ident(std::move(name), at);
  }
  if (ts.acceptPunct("(")) {
    ExprRef inner = parse_expr(ts, property_ops);
    ts.expectPunct(")");
    return inner;
  }
  if (ts.atPunct("!")) {
    ts.next();
    return e_unary(Expr::Op::LogicNot, parsePrimary(ts, property_ops), at);
  }
  if (ts.atPunct("~")) {
    ts.next();
    return e_unary(Expr::Op::BitNot, parsePrimary(ts, property_ops), at);
  }
  if (ts.atPunct("{"))
    throw UnsupportedConstruct(at, "concatenation");
  if (ts.atPunct("?"))
    throw UnsupportedConstruct(at, "conditional operator");
  throw SyntaxError(at, "expression");
}

ExprRef parseBinary(TokenStream& ts, bool property_ops, int min_prec) {
  ExprRef lhs = parsePrimary(ts, property_ops);
  for (;;) {
    if (ts.atPunct("?"))
      throw UnsupportedConstruct(ts.pos(), "conditional operator");
    OpInfo info;
    if (!binaryOp(ts, property_ops, &info) || info.prec < min_prec) break;
    SourcePos at = ts.pos();
    ts.next();
    ExprRef rhs =
        parseBinary(ts, property_ops, info.right_assoc ? info.prec : info.prec + 1);
    lhs = e_binary(info.op, std::move(lhs), std::move(rhs), at);
  }
  return lhs;
}

}  // namespace

ExprRef parse_expr(TokenStream& ts, bool property_ops) {
  return parseBinary(ts, property_ops, 0);
}

}  // namespace inductor
