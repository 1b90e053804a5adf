// SPDX-License-Identifier: Apache-2.0
//
// Conflict-driven clause-learning SAT solver. Deliberately deterministic:
// activity-ordered decisions break ties toward the lowest variable index,
// phases are saved (starting at false), and restarts follow the Luby
// sequence with a fixed unit — identical inputs always produce identical
// behavior. Learned clauses are kept for the lifetime of the query.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "inductor/checker.hpp"
#include "inductor/diagnostics.hpp"

namespace inductor {

SolveResult solve_external(const Cnf& cnf, const std::string& path,
                           double timeout_secs);

namespace {

// Internal literal encoding: variable v (0-based) yields literals 2v
// (positive) and 2v+1 (negative).
inline int ivar(int lit) { return lit >> 1; }
inline int ineg(int lit) { return lit ^ 1; }

enum : int8_t { kUndef = -1, kFalse = 0, kTrue = 1 };

struct Watcher {
  int clause = 0;
  int blocker = 0;  // a literal whose truth satisfies the clause
};

// Index i of the Luby sequence (1, 1, 2, 1, 1, 2, 4, ...), 1-based.
int64_t luby(int64_t i) {
  int64_t size = 1, seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != i) {
    size = (size - 1) / 2;
    --seq;
    i %= size;
  }
  return int64_t{1} << seq;
}

class Cdcl {
 public:
  Cdcl(const Cnf& cnf, double timeout_secs)
      : nvars_(cnf.num_vars),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_secs))) {
    assigns_.assign(nvars_, kUndef);
    level_.assign(nvars_, 0);
    reason_.assign(nvars_, -1);
    activity_.assign(nvars_, 0.0);
    phase_.assign(nvars_, false);
    seen_.assign(nvars_, 0);
    watches_.assign(2 * std::size_t(nvars_), {});

    for (const std::vector<int>& clause : cnf.clauses) {
      // Normalize: drop duplicate literals, skip tautologies.
      std::vector<int> lits;
      bool tautology = false;
      for (int ext : clause) {
        int lit = 2 * (std::abs(ext) - 1) + (ext < 0);
        bool dup = false;
        for (int have : lits) {
          if (have == lit) dup = true;
          if (have == ineg(lit)) tautology = true;
        }
        if (!dup) lits.push_back(lit);
      }
      if (tautology) continue;
      if (lits.empty()) {
        unsat_at_load_ = true;
        return;
      }
      if (lits.size() == 1) {
        if (value(lits[0]) == kFalse) {
          unsat_at_load_ = true;
          return;
        }
        if (value(lits[0]) == kUndef) enqueue(lits[0], -1);
        continue;
      }
      clauses_.push_back(std::move(lits));
      attach_last();
    }
  }

  SolveResult run() {
    SolveResult out;
    if (unsat_at_load_) {
      out.status = SatStatus::Unsat;
      return out;
    }
    int64_t next_restart = kRestartUnit;
    int64_t restarts = 0;

    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++conflicts_;
        if (decision_level() == 0) {
          out.status = SatStatus::Unsat;
          return out;
        }
        std::vector<int> learnt;
        int bj = analyze(confl, learnt);
        backjump(bj);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          int idx = static_cast<int>(clauses_.size());
          clauses_.push_back(std::move(learnt));
          attach_last();
          enqueue(clauses_[idx][0], idx);
        }
        var_inc_ /= kDecay;
        if (conflicts_ >= next_restart) {
          backjump(0);
          next_restart = conflicts_ + kRestartUnit * luby(++restarts);
        }
        if ((conflicts_ & 63) == 0 && timed_out()) {
          out.status = SatStatus::Timeout;
          return out;
        }
      } else {
        if (static_cast<int>(trail_.size()) == nvars_) {
          out.status = SatStatus::Sat;
          if (nvars_ > 0) {
            out.model.assign(std::size_t(nvars_) + 1, false);
            for (int v = 0; v < nvars_; ++v)
              out.model[std::size_t(v) + 1] = assigns_[v] == kTrue;
          }
          return out;
        }
        if (timed_out()) {
          out.status = SatStatus::Timeout;
          return out;
        }
        decide();
      }
    }
  }

 private:
  static constexpr int64_t kRestartUnit = 64;
  static constexpr double kDecay = 0.95;

  int nvars_;
  std::chrono::steady_clock::time_point deadline_;
  bool unsat_at_load_ = false;

  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<bool> phase_;
  std::vector<char> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  int64_t conflicts_ = 0;

  int8_t value(int lit) const {
    int8_t a = assigns_[ivar(lit)];
    if (a == kUndef) return kUndef;
    return (a == kTrue) == !(lit & 1) ? kTrue : kFalse;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  bool timed_out() const {
    return std::chrono::steady_clock::now() >= deadline_;
  }

  // Registers watches on the first two literals of the newest clause. The
  // list is keyed by the watched literal itself: it is visited exactly when
  // that literal becomes false.
  void attach_last() {
    int idx = static_cast<int>(clauses_.size()) - 1;
    const std::vector<int>& c = clauses_[idx];
    watches_[c[0]].push_back({idx, c[1]});
    watches_[c[1]].push_back({idx, c[0]});
  }

  void enqueue(int lit, int reason) {
    int v = ivar(lit);
    assigns_[v] = (lit & 1) ? kFalse : kTrue;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
  }

  void bump(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
  }

  // Returns the index of a conflicting clause, or -1 when propagation
  // reaches a fixpoint.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int p = trail_[qhead_++];
      int false_lit = ineg(p);
      std::vector<Watcher>& ws = watches_[false_lit];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        Watcher w = ws[i];
        if (value(w.blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        std::vector<int>& c = clauses_[w.clause];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        // c[1] == false_lit from here on.
        if (value(c[0]) == kTrue) {
          ws[j++] = {w.clause, c[0]};
          ++i;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != kFalse) {
            c[1] = c[k];
            c[k] = false_lit;
            watches_[c[1]].push_back({w.clause, c[0]});
            moved = true;
            break;
          }
        }
        if (moved) {
          ++i;  // watcher migrated to the new literal
          continue;
        }
        ws[j++] = {w.clause, c[0]};
        ++i;
        if (value(c[0]) == kFalse) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return w.clause;
        }
        enqueue(c[0], w.clause);
      }
      ws.resize(j);
    }
    return -1;
  }

  // First-unique-implication-point conflict analysis. Fills `learnt` with
  // the asserting literal first and returns the backjump level.
  int analyze(int confl, std::vector<int>& learnt) {
    learnt.assign(1, 0);  // slot for the asserting literal
    int counter = 0;
    int p = -1;
    std::size_t idx = trail_.size();

    for (;;) {
      const std::vector<int>& c = clauses_[confl];
      for (int q : c) {
        if (p != -1 && q == p) continue;
        int v = ivar(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bump(v);
          if (level_[v] >= decision_level())
            ++counter;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[ivar(trail_[idx - 1])]) --idx;
      p = trail_[idx - 1];
      --idx;
      seen_[ivar(p)] = 0;
      if (--counter == 0) break;
      confl = reason_[ivar(p)];
    }
    learnt[0] = ineg(p);

    int bj = 0;
    if (learnt.size() > 1) {
      std::size_t best = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i)
        if (level_[ivar(learnt[i])] > level_[ivar(learnt[best])]) best = i;
      std::swap(learnt[1], learnt[best]);
      bj = level_[ivar(learnt[1])];
    }
    for (std::size_t i = 1; i < learnt.size(); ++i) seen_[ivar(learnt[i])] = 0;
    return bj;
  }

  void backjump(int target) {
    if (decision_level() <= target) return;
    std::size_t keep = trail_lim_[target];
    for (std::size_t i = trail_.size(); i-- > keep;) {
      int v = ivar(trail_[i]);
      phase_[v] = assigns_[v] == kTrue;
      assigns_[v] = kUndef;
      reason_[v] = -1;
    }
    trail_.resize(keep);
    trail_lim_.resize(target);
    qhead_ = keep;
  }

  void decide() {
    int best = -1;
    for (int v = 0; v < nvars_; ++v)
      if (assigns_[v] == kUndef && (best == -1 || activity_[v] > activity_[best]))
        best = v;
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(2 * best + (phase_[best] ? 0 : 1), -1);
  }
};

}  // namespace

SolveResult solve(const Cnf& cnf, double timeout_secs,
                  const SolverConfig& config) {
  if (timeout_secs <= 0) throw ConfigError("solver timeout must be positive");
  if (!config.external_path.empty())
    return solve_external(cnf, config.external_path, timeout_secs);
  return Cdcl(cnf, timeout_secs).run();
}

}  // namespace inductor
