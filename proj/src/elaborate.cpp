// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "inductor/frontend.hpp"
#include "lower.hpp"

namespace inductor {

namespace {

int minWidth(uint64_t value) {
  int w = 1;
  while (value >> w) ++w;
  return w;
}

// Mutable evaluation state while walking one always block.
// `read` is what right-hand sides see (blocking assignments update it);
// `next` is what each register will hold after the clock edge.
struct WalkEnv {
  Env read;
  std::map<std::string, Bits> next;
  std::set<std::string> written;
  // Registers with a nonblocking write on this path. A later blocking write
  // to the same register would commit before the nonblocking one in real
  // scheduling, which the in-order substitution model cannot express.
  std::set<std::string> nonblocked;
};

class Elaborator {
 public:
  explicit Elaborator(const DesignAst& ast) : ast_(ast) {}

  ElaboratedDesign run() {
    checkDeclarations();
    layoutState();
    resolveWires();
    processAlwaysBlocks();
    return build();
  }

 private:
  // --- declaration bookkeeping ---------------------------------------

  void checkDeclarations() {
    for (const auto& t : ast_.tasks) {
      if (tasks_.count(t.name))
        throw ElaborationError("task '" + t.name + "' declared twice");
      tasks_[t.name] = t.body;
    }

    for (const auto& b : ast_.always_blocks) {
      if (clock_.empty()) clock_ = b.clock;
      if (b.clock != clock_)
        throw ElaborationError("always blocks use different clocks ('" +
                               clock_ + "' and '" + b.clock + "')");
    }

    for (const auto& p : ast_.ports) {
      if (port_dirs_.count(p.name))
        throw ElaborationError("port '" + p.name + "' declared twice");
      port_dirs_[p.name] = p.dir;
    }
    if (!clock_.empty()) {
      auto it = port_dirs_.find(clock_);
      if (it == port_dirs_.end() || it->second != Port::Dir::Input)
        throw ElaborationError("clock '" + clock_ + "' is not an input port");
    }

    for (const auto& r : ast_.regs) {
      if (reg_widths_.count(r.name))
        throw ElaborationError("register '" + r.name + "' declared twice");
      reg_widths_[r.name] = r.width;
      auto dir = port_dirs_.find(r.name);
      if (dir != port_dirs_.end() && dir->second == Port::Dir::Input)
        throw ElaborationError("input port '" + r.name +
                               "' cannot be a register");
    }
    for (const auto& w : ast_.wires) {
      if (wire_widths_.count(w.name) || reg_widths_.count(w.name))
        throw ElaborationError("signal '" + w.name + "' declared twice");
      wire_widths_[w.name] = w.width;
    }
  }

  // Assigns state-variable indices (declaration order, LSB first) and input
  // indices (port order, clock excluded), and seeds the signal views.
  void layoutState() {
    for (const auto& r : ast_.regs) {
      Bits view;
      for (int j = 0; j < r.width; ++j) {
        std::string bit_name =
            r.width == 1 ? r.name : r.name + "[" + std::to_string(j) + "]";
        view.push_back(f_state(static_cast<int>(var_names_.size())));
        var_names_.push_back(bit_name);
        source_map_.push_back({r.name, j});
      }
      views_[r.name] = std::move(view);
    }

    for (const auto& p : ast_.ports) {
      if (p.dir != Port::Dir::Input || p.name == clock_) continue;
      if (reg_widths_.count(p.name)) continue;  // rejected earlier anyway
      Bits view;
      for (int j = 0; j < p.width; ++j) {
        std::string bit_name =
            p.width == 1 ? p.name : p.name + "[" + std::to_string(j) + "]";
        view.push_back(f_input(static_cast<int>(input_names_.size())));
        input_names_.push_back(bit_name);
      }
      views_[p.name] = std::move(view);
    }

    for (const auto& [name, value] : ast_.params) {
      if (views_.count(name))
        throw ElaborationError("parameter '" + name +
                               "' collides with a signal");
      views_[name] = const_bits(static_cast<uint64_t>(value),
                                minWidth(static_cast<uint64_t>(value)));
    }
  }

  // Substitutes wire definitions until a fixpoint; any wire that still
  // cannot be resolved depends (transitively) on itself.
  void resolveWires() {
    for (const auto& a : ast_.assigns) {
      if (reg_widths_.count(a.lhs))
        throw ElaborationError("continuous assign drives register '" +
                               a.lhs + "'");
      auto pd = port_dirs_.find(a.lhs);
      if (pd != port_dirs_.end() && pd->second == Port::Dir::Input)
        throw ElaborationError("continuous assign drives input '" + a.lhs +
                               "'");
      if (!wire_widths_.count(a.lhs)) {
        // `assign` to an undeclared output implies a wire of port width.
        auto dir = port_dirs_.find(a.lhs);
        if (dir == port_dirs_.end() || dir->second != Port::Dir::Output)
          throw ElaborationError("continuous assign drives undeclared '" +
                                 a.lhs + "'");
        for (const auto& p : ast_.ports)
          if (p.name == a.lhs) wire_widths_[a.lhs] = p.width;
      }
      if (wire_defs_.count(a.lhs))
        throw ElaborationError("wire '" + a.lhs + "' driven twice");
      wire_defs_[a.lhs] = a.rhs;
    }

    std::set<std::string> pending;
    for (const auto& [name, def] : wire_defs_) pending.insert(name);
    bool progress = true;
    while (!pending.empty() && progress) {
      progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        try {
          Bits bits = lower_expr(wire_defs_.at(*it), views_);
          bits.resize(static_cast<size_t>(wire_widths_.at(*it)), f_false());
          views_[*it] = std::move(bits);
          it = pending.erase(it);
          progress = true;
        } catch (const UnknownSignal& e) {
          if (!pending.count(e.name())) throw;  // genuinely unknown
          ++it;  // depends on an unresolved wire; retry next round
        }
      }
    }
    if (!pending.empty())
      throw ElaborationError("combinational cycle through wire '" +
                             *pending.begin() + "'");
  }

  // --- always-block semantics ------------------------------------------

  Bits lowerRhs(const ExprRef& e, const Env& read, size_t width) {
    Bits bits = lower_expr(e, read);
    bits.resize(width, f_false());  // truncate or zero-extend to target
    return bits;
  }

  void walk(const StmtRef& stmt, WalkEnv& env,
            std::set<std::string>& active_tasks) {
    switch (stmt->kind) {
      case Stmt::Kind::Block:
        for (const auto& s : stmt->body) walk(s, env, active_tasks);
        return;

      case Stmt::Kind::TaskCall: {
        auto it = tasks_.find(stmt->callee);
        if (it == tasks_.end())
          throw ElaborationError("call to unknown task '" + stmt->callee +
                                 "'");
        if (!active_tasks.insert(stmt->callee).second)
          throw ElaborationError("recursive task '" + stmt->callee + "'");
        walk(it->second, env, active_tasks);
        active_tasks.erase(stmt->callee);
        return;
      }

      case Stmt::Kind::Blocking:
      case Stmt::Kind::Nonblocking: {
        auto rw = reg_widths_.find(stmt->lhs);
        if (rw == reg_widths_.end())
          throw ElaborationError("assignment to non-register '" + stmt->lhs +
                                 "'");
        if (stmt->kind == Stmt::Kind::Blocking) {
          if (env.nonblocked.count(stmt->lhs))
            throw ElaborationError(
                "blocking assignment to '" + stmt->lhs +
                "' after a nonblocking one on the same path");
        } else {
          env.nonblocked.insert(stmt->lhs);
        }
        size_t width = static_cast<size_t>(rw->second);
        Bits value;
        if (stmt->lhs_index) {
          uint64_t idx = 0;
          if (!const_value(stmt->lhs_index, views_, &idx))
            throw UnsupportedConstruct(stmt->pos, "non-constant bit select");
          if (idx >= width)
            throw UnsupportedConstruct(stmt->pos,
                                       "bit index out of range for '" +
                                           stmt->lhs + "'");
          value = env.next.at(stmt->lhs);
          if (stmt->kind == Stmt::Kind::Blocking)
            value = env.read.at(stmt->lhs);
          Bits rhs = lower_expr(stmt->rhs, env.read);
          value[idx] = rhs[0];
        } else {
          value = lowerRhs(stmt->rhs, env.read, width);
        }
        env.next[stmt->lhs] = value;
        if (stmt->kind == Stmt::Kind::Blocking) env.read[stmt->lhs] = value;
        env.written.insert(stmt->lhs);
        return;
      }

      case Stmt::Kind::If: {
        FormulaRef cond = lower_bool(stmt->cond, env.read);
        WalkEnv then_env = env;
        WalkEnv else_env = env;
        walk(stmt->then_branch, then_env, active_tasks);
        if (stmt->else_branch) walk(stmt->else_branch, else_env, active_tasks);

        // Merge: every signal both branches can see gets an ite; untouched
        // entries collapse because f_ite folds equal arms.
        for (auto& [name, bits] : env.read) {
          const Bits& t = then_env.read.at(name);
          const Bits& e = else_env.read.at(name);
          for (size_t j = 0; j < bits.size(); ++j)
            bits[j] = f_ite(cond, t[j], e[j]);
        }
        for (auto& [name, bits] : env.next) {
          const Bits& t = then_env.next.at(name);
          const Bits& e = else_env.next.at(name);
          for (size_t j = 0; j < bits.size(); ++j)
            bits[j] = f_ite(cond, t[j], e[j]);
        }
        env.written.insert(then_env.written.begin(), then_env.written.end());
        env.written.insert(else_env.written.begin(), else_env.written.end());
        env.nonblocked.insert(then_env.nonblocked.begin(),
                              then_env.nonblocked.end());
        env.nonblocked.insert(else_env.nonblocked.begin(),
                              else_env.nonblocked.end());
        return;
      }
    }
  }

  WalkEnv freshEnv() const {
    WalkEnv env;
    env.read = views_;
    for (const auto& r : ast_.regs) env.next[r.name] = views_.at(r.name);
    return env;
  }

  void processAlwaysBlocks() {
    for (const auto& r : ast_.regs) next_bits_[r.name] = views_.at(r.name);

    for (const auto& block : ast_.always_blocks) {
      WalkEnv env = freshEnv();
      std::set<std::string> active;
      walk(block.body, env, active);

      for (const auto& name : env.written) {
        if (!driving_block_.emplace(name, &block).second)
          throw ElaborationError("register '" + name +
                                 "' driven from multiple always blocks");
        next_bits_[name] = env.next.at(name);
      }

      collectInit(block);
    }
  }

  // A leading `if (rst)` / `if (reset)` on a bare input is the reset
  // construct: the registers its branch sets to constants make up Init.
  // Everything else (including registers tied to inputs there) starts
  // unconstrained.
  void collectInit(const AlwaysBlock& block) {
    const Stmt* first = block.body.get();
    if (first->kind == Stmt::Kind::Block) {
      if (first->body.empty()) return;
      first = first->body.front().get();
    }
    if (first->kind != Stmt::Kind::If) return;
    const ExprRef& cond = first->cond;
    if (cond->kind != Expr::Kind::Ident) return;
    if (cond->ident != "rst" && cond->ident != "reset") return;
    auto dir = port_dirs_.find(cond->ident);
    if (dir == port_dirs_.end() || dir->second != Port::Dir::Input) return;

    WalkEnv env = freshEnv();
    std::set<std::string> active;
    walk(first->then_branch, env, active);
    for (const auto& name : env.written) {
      const Bits& bits = env.next.at(name);
      const Bits& vars = views_.at(name);
      for (size_t j = 0; j < bits.size(); ++j) {
        if (!bits[j]->is_const()) continue;
        init_conjuncts_.push_back(bits[j]->value ? vars[j]
                                                 : f_not(vars[j]));
      }
    }
  }

  ElaboratedDesign build() {
    std::vector<FormulaRef> next_functions;
    std::vector<FormulaRef> trans_parts;
    int index = 0;
    for (const auto& r : ast_.regs) {
      const Bits& bits = next_bits_.at(r.name);
      for (int j = 0; j < r.width; ++j, ++index) {
        next_functions.push_back(bits[j]);
        trans_parts.push_back(f_iff(f_state(index, true), bits[j]));
      }
    }

    TransitionSystem ts(var_names_, input_names_, f_and(init_conjuncts_),
                        f_and(std::move(trans_parts)),
                        std::move(next_functions), source_map_);

    ElaboratedDesign out{std::move(ts), {}, {}, {}, clock_};
    out.views = std::move(views_);
    for (const auto& p : ast_.properties) {
      out.properties[p.name] = p.prop;
      out.property_order.push_back(p.name);
    }
    return out;
  }

  const DesignAst& ast_;
  std::string clock_;
  std::map<std::string, Port::Dir> port_dirs_;
  std::map<std::string, int> reg_widths_;
  std::map<std::string, int> wire_widths_;
  std::map<std::string, StmtRef> tasks_;
  std::map<std::string, ExprRef> wire_defs_;
  std::map<std::string, const AlwaysBlock*> driving_block_;
  std::map<std::string, Bits> next_bits_;
  std::vector<FormulaRef> init_conjuncts_;
  std::vector<std::string> var_names_;
  std::vector<std::string> input_names_;
  std::vector<SourceBit> source_map_;
  Env views_;
};

}  // namespace

ElaboratedDesign elaborate(const DesignAst& ast) {
  return Elaborator(ast).run();
}

}  // namespace inductor
