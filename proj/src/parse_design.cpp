// SPDX-License-Identifier: Apache-2.0

#include <memory>
#include <set>

#include "inductor/frontend.hpp"
#include "lower.hpp"
#include "parser_util.hpp"

namespace inductor {

namespace {

// Constructs rejected up front with a dedicated diagnostic rather than a
// generic syntax error.
const std::set<std::string> kUnsupportedStmtKeywords{
    "for", "while", "repeat", "forever", "foreach", "do",
    "case", "casex", "casez", "fork", "wait", "disable",
};

const std::set<std::string> kUnsupportedItemKeywords{
    "initial",  "function", "generate", "genvar",   "integer",
    "real",     "specify",  "defparam", "for",      "case",
    "always_comb", "always_latch",      "always_ff", "inout",
};

class DesignParser {
 public:
  explicit DesignParser(const std::string& text) : ts_(text) {}

  DesignAst parse() {
    parseHeader();
    while (!ts_.acceptKeyword("endmodule")) parseItem();
    if (ts_.atKeyword("module"))
      throw UnsupportedConstruct(ts_.pos(), "multiple modules");
    if (!ts_.atEof()) throw SyntaxError(ts_.pos(), "end of file");
    mergeDirections();
    return std::move(ast_);
  }

 private:
  void parseHeader() {
    ts_.expectKeyword("module");
    ast_.name = ts_.expectIdent("module name");
    if (ts_.acceptPunct("(")) {
      if (!ts_.atPunct(")")) {
        do {
          if (ts_.atKeyword("input") || ts_.atKeyword("output") ||
              ts_.atKeyword("inout") || ts_.atKeyword("wire") ||
              ts_.atKeyword("reg"))
            throw UnsupportedConstruct(ts_.pos(), "ANSI port declaration");
          Port p;
          p.pos = ts_.pos();
          p.name = ts_.expectIdent("port name");
          ast_.ports.push_back(std::move(p));
        } while (ts_.acceptPunct(","));
      }
      ts_.expectPunct(")");
    }
    ts_.expectPunct(";");
  }

  // Folds an expression over the parameters seen so far. References to
  // anything else make it non-constant.
  bool foldConst(const ExprRef& e, uint64_t* out) {
    try {
      return const_value(e, param_env_, out);
    } catch (const UnknownSignal&) {
      return false;
    }
  }

  // [msb:0] → width msb+1; absent → 1. Bounds must fold to constants under
  // the parameters seen so far.
  int parseRange() {
    if (!ts_.acceptPunct("[")) return 1;
    SourcePos at = ts_.pos();
    ExprRef msb_e = parse_expr(ts_, false);
    ts_.expectPunct(":");
    ExprRef lsb_e = parse_expr(ts_, false);
    ts_.expectPunct("]");
    uint64_t msb = 0, lsb = 0;
    if (!foldConst(msb_e, &msb) || !foldConst(lsb_e, &lsb))
      throw UnsupportedConstruct(at, "non-constant range bound");
    if (lsb != 0) throw UnsupportedConstruct(at, "nonzero LSB in range");
    if (msb > 62) throw UnsupportedConstruct(at, "range wider than 63 bits");
    return static_cast<int>(msb) + 1;
  }

  void parseItem() {
    SourcePos at = ts_.pos();
    if (ts_.peek().kind != Token::Kind::Ident)
      throw SyntaxError(at, "module item");
    const std::string& kw = ts_.peek().text;

    if (kUnsupportedItemKeywords.count(kw))
      throw UnsupportedConstruct(at, kw);

    if (kw == "input" || kw == "output") {
      Port::Dir dir = kw == "input" ? Port::Dir::Input : Port::Dir::Output;
      ts_.next();
      bool is_reg = ts_.acceptKeyword("reg");  // `output reg [..] name`
      int width = parseRange();
      do {
        SourcePos npos = ts_.pos();
        std::string name = ts_.expectIdent("port name");
        dir_decls_.push_back({name, dir, width, npos});
        if (is_reg) ast_.regs.push_back({name, width, npos});
      } while (ts_.acceptPunct(","));
      ts_.expectPunct(";");
      return;
    }

    if (kw == "reg" || kw == "wire") {
      bool is_reg = kw == "reg";
      ts_.next();
      int width = parseRange();
      do {
        SourcePos npos = ts_.pos();
        std::string name = ts_.expectIdent("declaration name");
        if (ts_.atPunct("["))
          throw UnsupportedConstruct(ts_.pos(), "memory array");
        if (is_reg) {
          ast_.regs.push_back({name, width, npos});
        } else {
          ast_.wires.push_back({name, width, npos});
          if (ts_.acceptPunct("=")) {  // `wire w = expr;` sugar
            ExprRef rhs = parse_expr(ts_, false);
            ast_.assigns.push_back({name, std::move(rhs), npos});
          }
        }
      } while (ts_.acceptPunct(","));
      ts_.expectPunct(";");
      return;
    }

    if (kw == "parameter" || kw == "localparam") {
      ts_.next();
      do {
        SourcePos npos = ts_.pos();
        std::string name = ts_.expectIdent("parameter name");
        ts_.expectPunct("=");
        ExprRef value = parse_expr(ts_, false);
        uint64_t folded = 0;
        if (!foldConst(value, &folded))
          throw UnsupportedConstruct(npos, "non-constant parameter");
        ast_.params[name] = static_cast<int64_t>(folded);
        param_env_[name] = const_bits(folded, 63);
      } while (ts_.acceptPunct(","));
      ts_.expectPunct(";");
      return;
    }

    if (kw == "task") {
      ts_.next();
      TaskDecl task;
      task.pos = at;
      task.name = ts_.expectIdent("task name");
      if (ts_.atPunct("("))
        throw UnsupportedConstruct(ts_.pos(), "task arguments");
      ts_.expectPunct(";");
      auto body = std::make_shared<Stmt>();
      body->kind = Stmt::Kind::Block;
      body->pos = at;
      while (!ts_.atKeyword("endtask")) body->body.push_back(parseStmt());
      ts_.expectKeyword("endtask");
      task.body = std::move(body);
      ast_.tasks.push_back(std::move(task));
      return;
    }

    if (kw == "always") {
      ts_.next();
      AlwaysBlock block;
      block.pos = at;
      ts_.expectPunct("@");
      ts_.expectPunct("(");
      if (ts_.atKeyword("negedge"))
        throw UnsupportedConstruct(ts_.pos(), "negedge sensitivity");
      if (ts_.atPunct("*"))
        throw UnsupportedConstruct(ts_.pos(), "combinational always block");
      ts_.expectKeyword("posedge");
      block.clock = ts_.expectIdent("clock name");
      if (ts_.atKeyword("or"))
        throw UnsupportedConstruct(ts_.pos(), "multi-signal sensitivity");
      ts_.expectPunct(")");
      block.body = parseStmt();
      ast_.always_blocks.push_back(std::move(block));
      return;
    }

    if (kw == "assign") {
      ts_.next();
      ContAssign ca;
      ca.pos = at;
      ca.lhs = ts_.expectIdent("assignment target");
      if (ts_.atPunct("["))
        throw UnsupportedConstruct(ts_.pos(), "bit-select assign target");
      ts_.expectPunct("=");
      ca.rhs = parse_expr(ts_, false);
      ts_.expectPunct(";");
      ast_.assigns.push_back(std::move(ca));
      return;
    }

    if (kw == "property") {
      ts_.next();
      PropertyDecl decl;
      decl.pos = at;
      decl.name = ts_.expectIdent("property name");
      ts_.expectPunct(";");
      decl.prop = parse_property_unit(ts_, &symbols_);
      ts_.acceptPunct(";");
      ts_.expectKeyword("endproperty");
      symbols_[decl.name] = decl.prop;
      ast_.properties.push_back(std::move(decl));
      return;
    }

    throw SyntaxError(at, "module item");
  }

  StmtRef parseStmt() {
    SourcePos at = ts_.pos();
    auto stmt = std::make_shared<Stmt>();
    stmt->pos = at;

    if (ts_.peek().kind == Token::Kind::Ident &&
        kUnsupportedStmtKeywords.count(ts_.peek().text))
      throw UnsupportedConstruct(at, ts_.peek().text);

    if (ts_.acceptPunct(";")) {  // null statement
      stmt->kind = Stmt::Kind::Block;
      return stmt;
    }

    if (ts_.acceptKeyword("begin")) {
      stmt->kind = Stmt::Kind::Block;
      while (!ts_.atKeyword("end")) stmt->body.push_back(parseStmt());
      ts_.expectKeyword("end");
      return stmt;
    }

    if (ts_.acceptKeyword("if")) {
      stmt->kind = Stmt::Kind::If;
      ts_.expectPunct("(");
      stmt->cond = parse_expr(ts_, false);
      ts_.expectPunct(")");
      stmt->then_branch = parseStmt();
      if (ts_.acceptKeyword("else")) stmt->else_branch = parseStmt();
      return stmt;
    }

    if (ts_.peek().kind != Token::Kind::Ident)
      throw SyntaxError(at, "statement");

    std::string name = ts_.next().text;
    if (ts_.acceptPunct(";")) {  // argument-less task call
      stmt->kind = Stmt::Kind::TaskCall;
      stmt->callee = std::move(name);
      return stmt;
    }
    stmt->lhs = std::move(name);
    if (ts_.acceptPunct("[")) {
      stmt->lhs_index = parse_expr(ts_, false);
      ts_.expectPunct("]");
    }
    if (ts_.acceptPunct("=")) {
      stmt->kind = Stmt::Kind::Blocking;
    } else if (ts_.acceptPunct("<=")) {
      stmt->kind = Stmt::Kind::Nonblocking;
    } else {
      throw SyntaxError(ts_.pos(), "'=' or '<='");
    }
    stmt->rhs = parse_expr(ts_, false);
    ts_.expectPunct(";");
    return stmt;
  }

  // Folds `input`/`output` declarations into the header port list.
  void mergeDirections() {
    for (const auto& d : dir_decls_) {
      bool found = false;
      for (auto& p : ast_.ports) {
        if (p.name != d.name) continue;
        p.dir = d.dir;
        p.width = d.width;
        found = true;
        break;
      }
      if (!found)
        throw SyntaxError(d.pos,
                          "'" + d.name + "' to appear in the module header");
    }
  }

  struct DirDecl {
    std::string name;
    Port::Dir dir;
    int width;
    SourcePos pos;
  };

  TokenStream ts_;
  DesignAst ast_;
  Env param_env_;
  PropertySymbols symbols_;
  std::vector<DirDecl> dir_decls_;
};

}  // namespace

DesignAst parse_design(const std::string& text) {
  return DesignParser(text).parse();
}

}  // namespace inductor
