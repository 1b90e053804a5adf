// SPDX-License-Identifier: Apache-2.0

#include <memory>
#include <sstream>

#include "inductor/frontend.hpp"
#include "parser_util.hpp"

namespace inductor {

namespace {

std::shared_ptr<PropertyAst> makeProp(PropertyAst::Kind kind, SourcePos pos) {
  auto p = std::make_shared<PropertyAst>();
  p->kind = kind;
  p->pos = pos;
  return p;
}

// consequent sequence: ['##' n] expr ('##' n expr)*; every explicit delay
// must be at least one cycle.
std::vector<SeqElem> parseSequence(TokenStream& ts) {
  std::vector<SeqElem> seq;
  bool first = true;
  for (;;) {
    int delay = 0;
    if (ts.atPunct("##")) {
      SourcePos at = ts.pos();
      ts.next();
      uint64_t n = ts.expectNumber();
      if (n == 0) throw SyntaxError(at, "##1 or larger delay");
      delay = static_cast<int>(n);
    } else if (!first) {
      break;
    }
    SeqElem elem;
    elem.delay = delay;
    elem.cond = parse_expr(ts, /*property_ops=*/true);
    seq.push_back(std::move(elem));
    first = false;
    if (!ts.atPunct("##")) break;
  }
  return seq;
}

PropRef parseBody(TokenStream& ts, const PropertySymbols* symbols);

// One conjunct of an `and` chain: an implication, a boolean expression, a
// named property reference, or a parenthesized property.
PropRef parseTerm(TokenStream& ts, const PropertySymbols* symbols) {
  SourcePos at = ts.pos();
  size_t mark = ts.save();

  // Try the expression route first; it covers plain booleans, antecedents
  // of implications, and parenthesized boolean groups.
  try {
    ExprRef e = parse_expr(ts, /*property_ops=*/true);
    if (ts.acceptPunct("|->")) {
      auto p = makeProp(PropertyAst::Kind::Implication, at);
      p->expr = e;
      p->sequence = parseSequence(ts);
      return p;
    }
    if (e->kind == Expr::Kind::Ident && symbols && symbols->count(e->ident)) {
      auto p = makeProp(PropertyAst::Kind::Named, at);
      p->name = e->ident;
      return p;
    }
    auto p = makeProp(PropertyAst::Kind::Bool, at);
    p->expr = e;
    return p;
  } catch (const SyntaxError&) {
    // A '(' that encloses a property (e.g. "(a |-> ##1 b) and c") makes the
    // expression parser trip over the temporal operator; reparse the
    // parenthesized text as a property body.
    ts.restore(mark);
    if (!ts.atPunct("(")) throw;
  }

  ts.expectPunct("(");
  PropRef inner = parseBody(ts, symbols);
  ts.expectPunct(")");
  return inner;
}

PropRef parseBody(TokenStream& ts, const PropertySymbols* symbols) {
  PropRef lhs = parseTerm(ts, symbols);
  while (ts.atKeyword("and")) {
    SourcePos at = ts.pos();
    ts.next();
    PropRef rhs = parseTerm(ts, symbols);
    auto p = makeProp(PropertyAst::Kind::And, at);
    p->lhs = std::move(lhs);
    p->rhs = std::move(rhs);
    lhs = std::move(p);
  }
  return lhs;
}

}  // namespace

PropRef parse_property_unit(TokenStream& ts, const PropertySymbols* symbols) {
  std::optional<std::string> clock;
  ExprRef disable;

  if (ts.acceptPunct("@")) {
    ts.expectPunct("(");
    if (ts.atKeyword("negedge"))
      throw UnsupportedConstruct(ts.pos(), "negedge clocking");
    ts.expectKeyword("posedge");
    clock = ts.expectIdent("clock name");
    ts.expectPunct(")");
  }
  if (ts.atKeyword("disable")) {
    ts.next();
    ts.expectKeyword("iff");
    ts.expectPunct("(");
    disable = parse_expr(ts, /*property_ops=*/true);
    ts.expectPunct(")");
  }

  PropRef body = parseBody(ts, symbols);
  if (!clock && !disable) return body;

  // Attach the unit clauses to the root without mutating the shared body.
  auto root = std::make_shared<PropertyAst>(*body);
  root->clock = clock;
  root->disable = disable;
  return root;
}

PropRef parse_property(const std::string& text,
                       const PropertySymbols* symbols) {
  RepairResult repaired = repair_non_ascii(text);
  TokenStream ts(repaired.text);

  PropRef prop;
  if (ts.atKeyword("property")) {
    ts.next();
    ts.expectIdent("property name");
    ts.expectPunct(";");
    prop = parse_property_unit(ts, symbols);
    ts.acceptPunct(";");
    ts.expectKeyword("endproperty");
  } else {
    prop = parse_property_unit(ts, symbols);
    ts.acceptPunct(";");
  }
  if (!ts.atEof()) throw SyntaxError(ts.pos(), "end of property");
  return prop;
}

std::vector<NamedProperty> parse_property_file(
    const std::string& text, const PropertySymbols* symbols) {
  RepairResult repaired = repair_non_ascii(text);
  TokenStream ts(repaired.text);

  std::vector<NamedProperty> out;
  PropertySymbols scope = symbols ? *symbols : PropertySymbols{};
  while (!ts.atEof()) {
    std::string name;
    PropRef prop;
    if (ts.atKeyword("property")) {
      ts.next();
      name = ts.expectIdent("property name");
      ts.expectPunct(";");
      prop = parse_property_unit(ts, &scope);
      ts.acceptPunct(";");
      ts.expectKeyword("endproperty");
    } else {
      name = "p" + std::to_string(out.size());
      prop = parse_property_unit(ts, &scope);
      ts.acceptPunct(";");
    }
    scope[name] = prop;
    out.emplace_back(std::move(name), std::move(prop));
  }
  return out;
}

// --- Pretty printing -------------------------------------------------------

namespace {

int opPrec(Expr::Op op) {
  switch (op) {
    case Expr::Op::Iff: return 1;
    case Expr::Op::Implies: return 2;
    case Expr::Op::LogicOr: return 3;
    case Expr::Op::LogicAnd: return 4;
    case Expr::Op::BitOr: return 5;
    case Expr::Op::BitXor: return 6;
    case Expr::Op::BitAnd: return 7;
    case Expr::Op::Eq:
    case Expr::Op::Ne: return 8;
    case Expr::Op::Lt:
    case Expr::Op::Le:
    case Expr::Op::Gt:
    case Expr::Op::Ge: return 9;
    case Expr::Op::Add:
    case Expr::Op::Sub: return 10;
    default: return 11;
  }
}

const char* opSpelling(Expr::Op op) {
  switch (op) {
    case Expr::Op::Iff: return "<->";
    case Expr::Op::Implies: return "->";
    case Expr::Op::LogicOr: return "||";
    case Expr::Op::LogicAnd: return "&&";
    case Expr::Op::BitOr: return "|";
    case Expr::Op::BitXor: return "^";
    case Expr::Op::BitAnd: return "&";
    case Expr::Op::Eq: return "==";
    case Expr::Op::Ne: return "!=";
    case Expr::Op::Lt: return "<";
    case Expr::Op::Le: return "<=";
    case Expr::Op::Gt: return ">";
    case Expr::Op::Ge: return ">=";
    case Expr::Op::Add: return "+";
    case Expr::Op::Sub: return "-";
    default: return "?";
  }
}

void renderExpr(const ExprRef& e, int parent_prec, std::ostream& os) {
  switch (e->kind) {
    case Expr::Kind::Number:
      if (e->number_width > 0) os << e->number_width << "'d" << e->number;
      else os << e->number;
      return;
    case Expr::Kind::Ident:
      os << e->ident;
      return;
    case Expr::Kind::Select:
      os << e->ident << "[";
      renderExpr(e->index, 0, os);
      os << "]";
      return;
    case Expr::Kind::Unary:
      os << (e->op == Expr::Op::LogicNot ? "!" : "~");
      renderExpr(e->lhs, 11, os);
      return;
    case Expr::Kind::Binary: {
      int prec = opPrec(e->op);
      bool parens = prec < parent_prec;
      if (parens) os << "(";
      renderExpr(e->lhs, prec + (e->op == Expr::Op::Implies ? 1 : 0), os);
      os << " " << opSpelling(e->op) << " ";
      renderExpr(e->rhs, prec + (e->op == Expr::Op::Implies ? 0 : 1), os);
      if (parens) os << ")";
      return;
    }
  }
}

void renderProp(const PropRef& p, bool parenthesize_and, std::ostream& os) {
  switch (p->kind) {
    case PropertyAst::Kind::Bool:
      renderExpr(p->expr, 0, os);
      return;
    case PropertyAst::Kind::Implication:
      renderExpr(p->expr, 0, os);
      os << " |->";
      for (size_t i = 0; i < p->sequence.size(); ++i) {
        if (p->sequence[i].delay > 0) os << " ##" << p->sequence[i].delay;
        os << " ";
        renderExpr(p->sequence[i].cond, 0, os);
      }
      return;
    case PropertyAst::Kind::And:
      if (parenthesize_and) os << "(";
      renderProp(p->lhs, true, os);
      os << " and ";
      renderProp(p->rhs, true, os);
      if (parenthesize_and) os << ")";
      return;
    case PropertyAst::Kind::Named:
      os << p->name;
      return;
  }
}

}  // namespace

std::string expr_str(const ExprRef& expr) {
  std::ostringstream os;
  renderExpr(expr, 0, os);
  return os.str();
}

std::string property_str(const PropRef& prop) {
  std::ostringstream os;
  if (prop->clock) os << "@(posedge " << *prop->clock << ") ";
  if (prop->disable) {
    os << "disable iff (";
    renderExpr(prop->disable, 0, os);
    os << ") ";
  }
  renderProp(prop, false, os);
  return os.str();
}

// --- Structural equality ----------------------------------------------

bool expr_equal(const ExprRef& a, const ExprRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->op != b->op) return false;
  switch (a->kind) {
    case Expr::Kind::Number:
      return a->number == b->number && a->number_width == b->number_width;
    case Expr::Kind::Ident:
      return a->ident == b->ident;
    case Expr::Kind::Select:
      return a->ident == b->ident && expr_equal(a->index, b->index);
    case Expr::Kind::Unary:
      return expr_equal(a->lhs, b->lhs);
    case Expr::Kind::Binary:
      return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
  return false;
}

bool prop_equal(const PropRef& a, const PropRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->clock != b->clock) return false;
  if ((a->disable == nullptr) != (b->disable == nullptr)) return false;
  if (a->disable && !expr_equal(a->disable, b->disable)) return false;
  switch (a->kind) {
    case PropertyAst::Kind::Bool:
      return expr_equal(a->expr, b->expr);
    case PropertyAst::Kind::Implication: {
      if (!expr_equal(a->expr, b->expr)) return false;
      if (a->sequence.size() != b->sequence.size()) return false;
      for (size_t i = 0; i < a->sequence.size(); ++i) {
        if (a->sequence[i].delay != b->sequence[i].delay) return false;
        if (!expr_equal(a->sequence[i].cond, b->sequence[i].cond))
          return false;
      }
      return true;
    }
    case PropertyAst::Kind::And:
      return prop_equal(a->lhs, b->lhs) && prop_equal(a->rhs, b->rhs);
    case PropertyAst::Kind::Named:
      return a->name == b->name;
  }
  return false;
}

}  // namespace inductor
