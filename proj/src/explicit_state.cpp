// SPDX-License-Identifier: Apache-2.0

#include "inductor/explicit_state.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "inductor/diagnostics.hpp"

namespace inductor {

namespace {

// True when `f` never reads an input variable, in which case a safety check
// does not have to sweep the input alphabet.
bool readsInputs(const Formula& f) {
  if (f.op == Formula::Op::Var) return f.var.kind == VarRef::Kind::Input;
  for (const auto& arg : f.args)
    if (readsInputs(*arg)) return true;
  return false;
}

void unpack(std::uint64_t packed, Valuation& out) {
  out.set_low_bits(packed);
}

// One BFS edge: reading `input` in the parent state leads to `next`.
struct Edge {
  std::uint64_t next;
  std::uint64_t input;
};

// Computes every outgoing edge of one state, inputs in ascending order.
// For functional systems each input yields exactly one successor; otherwise
// all candidate next states are filtered through the transition relation.
class Stepper {
 public:
  explicit Stepper(const TransitionSystem& ts)
      : ts_(ts),
        cur_(ts.num_vars()),
        nxt_(std::in_place, ts.num_vars()),
        in_(std::in_place, ts.num_inputs()) {}

  void edges(std::uint64_t packed, std::vector<Edge>& out) {
    out.clear();
    unpack(packed, cur_);
    const std::uint64_t num_inputs = std::uint64_t{1} << ts_.num_inputs();
    if (ts_.is_functional()) {
      for (std::uint64_t in = 0; in < num_inputs; ++in) {
        unpack(in, *in_);
        for (int v = 0; v < ts_.num_vars(); ++v)
          nxt_->set(v, eval(*ts_.next_function(v), cur_, std::nullopt, in_));
        out.push_back({nxt_->low_bits(), in});
      }
    } else {
      const std::uint64_t num_states = std::uint64_t{1} << ts_.num_vars();
      for (std::uint64_t in = 0; in < num_inputs; ++in) {
        unpack(in, *in_);
        for (std::uint64_t next = 0; next < num_states; ++next) {
          unpack(next, *nxt_);
          if (eval(ts_.trans(), cur_, nxt_, in_)) out.push_back({next, in});
        }
      }
    }
  }

  // Lowest input valuation that falsifies `safe` in `packed`, if any.  When
  // `safe` ignores the inputs a single evaluation decides the state and the
  // witness input defaults to zero.
  std::int64_t firstBadInput(std::uint64_t packed, const Formula& safe,
                             bool safe_reads_inputs) {
    unpack(packed, cur_);
    if (!safe_reads_inputs) {
      unpack(0, *in_);
      return eval(safe, cur_, std::nullopt, in_) ? -1 : 0;
    }
    const std::uint64_t num_inputs = std::uint64_t{1} << ts_.num_inputs();
    for (std::uint64_t in = 0; in < num_inputs; ++in) {
      unpack(in, *in_);
      if (!eval(safe, cur_, std::nullopt, in_)) return static_cast<std::int64_t>(in);
    }
    return -1;
  }

 private:
  const TransitionSystem& ts_;
  Valuation cur_;
  std::optional<Valuation> nxt_, in_;
};

void requireEnumerable(const TransitionSystem& ts, int bit_cap) {
  const int bits = ts.num_vars() + ts.num_inputs();
  if (bits > bit_cap || bits > 63)
    throw StateSpaceTooLarge(std::to_string(bits) + " state+input bits, cap " +
                             std::to_string(std::min(bit_cap, 63)));
}

}  // namespace

std::vector<State> successors(const TransitionSystem& ts, const State& s,
                              int bit_cap) {
  requireEnumerable(ts, bit_cap);
  Stepper stepper(ts);
  std::vector<Edge> edges;
  stepper.edges(s.bits.low_bits(), edges);

  std::vector<std::uint64_t> packed;
  packed.reserve(edges.size());
  for (const Edge& e : edges) packed.push_back(e.next);
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

  std::vector<State> out;
  out.reserve(packed.size());
  for (std::uint64_t p : packed)
    out.push_back(State{Valuation(ts.num_vars(), p)});
  return out;
}

BruteForceResult brute_force_check(const TransitionSystem& ts,
                                   const FormulaRef& safe,
                                   const BruteForceOptions& opts) {
  requireEnumerable(ts, opts.bit_cap);
  const int nv = ts.num_vars();
  const std::uint64_t num_states = std::uint64_t{1} << nv;
  const bool safe_reads_inputs = readsInputs(*safe);

  std::vector<std::uint8_t> seen(num_states, 0);
  // Per-state BFS predecessor, for rebuilding a shortest trace.  A root has
  // parent -1; parent_input[s] is the input read in parent[s] to reach s.
  std::vector<std::int64_t> parent(num_states, -1);
  std::vector<std::uint64_t> parent_input(num_states, 0);

  BruteForceResult res;

  auto capExceeded = [&](int depth) {
    res.verdict = BruteVerdict::CapExceeded;
    res.depth = depth;
    return res;
  };

  // Layer 0: all states satisfying Init, in ascending packed order.
  std::vector<std::uint64_t> layer;
  {
    Valuation cur(nv);
    for (std::uint64_t s = 0; s < num_states; ++s) {
      unpack(s, cur);
      if (!eval(ts.init(), cur, std::nullopt, std::nullopt)) continue;
      if (res.visited == opts.state_cap) return capExceeded(0);
      seen[s] = 1;
      ++res.visited;
      layer.push_back(s);
    }
  }

  auto rebuildTrace = [&](std::uint64_t bad_state, std::uint64_t bad_input) {
    std::vector<std::uint64_t> chain{bad_state};
    std::vector<std::uint64_t> ins;
    for (std::uint64_t s = bad_state; parent[s] >= 0;
         s = static_cast<std::uint64_t>(parent[s])) {
      chain.push_back(static_cast<std::uint64_t>(parent[s]));
      ins.push_back(parent_input[s]);
    }
    std::reverse(chain.begin(), chain.end());
    std::reverse(ins.begin(), ins.end());
    ins.push_back(bad_input);

    Trace trace;
    for (std::uint64_t s : chain)
      trace.states.push_back(State{Valuation(nv, s)});
    for (std::uint64_t in : ins)
      trace.inputs.emplace_back(ts.num_inputs(), in);
    return trace;
  };

  const bool parallel = opts.parallel;
#ifdef _OPENMP
  const int workers =
      opts.workers > 0 ? opts.workers : omp_get_max_threads();
#else
  (void)opts.workers;
#endif

  std::vector<std::int64_t> bad;           // per-frontier-slot bad input
  std::vector<std::vector<Edge>> expand;   // per-frontier-slot edges

  for (int depth = 0; !layer.empty(); ++depth) {
    const std::int64_t n = static_cast<std::int64_t>(layer.size());
    bad.assign(layer.size(), -1);

    // Check phase: scan the whole layer for violations, then pick the first
    // one in layer order so serial and parallel runs agree exactly.
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
      {
        Stepper stepper(ts);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i)
          bad[i] = stepper.firstBadInput(layer[i], *safe, safe_reads_inputs);
      }
#else
      Stepper stepper(ts);
      for (std::int64_t i = 0; i < n; ++i)
        bad[i] = stepper.firstBadInput(layer[i], *safe, safe_reads_inputs);
#endif
    } else {
      Stepper stepper(ts);
      for (std::int64_t i = 0; i < n; ++i)
        bad[i] = stepper.firstBadInput(layer[i], *safe, safe_reads_inputs);
    }
    for (std::int64_t i = 0; i < n; ++i) {
      if (bad[i] < 0) continue;
      res.verdict = BruteVerdict::Violated;
      res.depth = depth;
      res.trace = rebuildTrace(layer[i], static_cast<std::uint64_t>(bad[i]));
      return res;
    }

    res.depth = depth;
    if (opts.max_depth >= 0 && depth == opts.max_depth) return res;

    // Expand phase: each frontier slot fills its own edge list, inputs
    // ascending, so the merge below is order-independent of thread count.
    expand.resize(layer.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
      {
        Stepper stepper(ts);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) stepper.edges(layer[i], expand[i]);
      }
#else
      Stepper stepper(ts);
      for (std::int64_t i = 0; i < n; ++i) stepper.edges(layer[i], expand[i]);
#endif
    } else {
      Stepper stepper(ts);
      for (std::int64_t i = 0; i < n; ++i) stepper.edges(layer[i], expand[i]);
    }

    // Merge phase: sequential, in frontier order then input order, so each
    // new state gets a canonical (lowest) predecessor and the next layer is
    // deterministic.
    std::vector<std::uint64_t> next_layer;
    for (std::int64_t i = 0; i < n; ++i) {
      for (const Edge& e : expand[i]) {
        if (seen[e.next]) continue;
        if (res.visited == opts.state_cap) return capExceeded(depth);
        seen[e.next] = 1;
        ++res.visited;
        parent[e.next] = static_cast<std::int64_t>(layer[i]);
        parent_input[e.next] = e.input;
        next_layer.push_back(e.next);
      }
    }
    layer.swap(next_layer);
  }

  res.verdict = BruteVerdict::Holds;
  return res;
}

}  // namespace inductor
