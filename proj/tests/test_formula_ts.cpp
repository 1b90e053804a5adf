// SPDX-License-Identifier: Apache-2.0
//
// Formula construction/evaluation and the explicit-state oracle, exercised
// on systems small enough to verify by hand. Expected traces and counts in
// this file were derived on paper from the next-state equations written
// next to each system.

#include <doctest.h>

#include <vector>

#include "inductor/diagnostics.hpp"
#include "inductor/explicit_state.hpp"
#include "inductor/formula.hpp"
#include "inductor/transition_system.hpp"

using namespace inductor;

namespace {

// Two-bit binary counter, free running: b0' = !b0, b1' = b1 ^ b0.
// Packed values (b0 is bit 0) cycle 0 -> 1 -> 2 -> 3 -> 0.
TransitionSystem counter2() {
  FormulaRef b0 = f_state(0), b1 = f_state(1);
  FormulaRef n0 = f_not(b0);
  FormulaRef n1 = f_xor(b1, b0);
  FormulaRef init = f_and(f_not(b0), f_not(b1));
  FormulaRef trans =
      f_and(f_iff(f_state(0, true), n0), f_iff(f_state(1, true), n1));
  return TransitionSystem({"b0", "b1"}, {}, init, trans, {n0, n1});
}

// Two-bit counter that only advances when input `en` is high:
// b0' = b0 ^ en, b1' = b1 ^ (b0 && en). From 00, three en=1 steps reach 11.
TransitionSystem counter2en() {
  FormulaRef b0 = f_state(0), b1 = f_state(1), en = f_input(0);
  FormulaRef n0 = f_xor(b0, en);
  FormulaRef n1 = f_xor(b1, f_and(b0, en));
  FormulaRef init = f_and(f_not(b0), f_not(b1));
  FormulaRef trans =
      f_and(f_iff(f_state(0, true), n0), f_iff(f_state(1, true), n1));
  return TransitionSystem({"b0", "b1"}, {"en"}, init, trans, {n0, n1});
}

}  // namespace

TEST_CASE("formula constructors fold constants") {
  FormulaRef x = f_state(0);
  CHECK(f_and(f_true(), x) == x);
  CHECK(f_and(f_false(), x)->is_const_false());
  CHECK(f_or(f_false(), x) == x);
  CHECK(f_or(f_true(), x)->is_const_true());
  CHECK(f_not(f_not(x)) == x);
  CHECK(f_not(f_true())->is_const_false());
  CHECK(f_implies(f_false(), x)->is_const_true());
  CHECK(f_implies(f_true(), x) == x);
  CHECK(f_ite(x, f_true(), f_false()) == x);
  CHECK(f_and(std::vector<FormulaRef>{})->is_const_true());
  CHECK(f_or(std::vector<FormulaRef>{})->is_const_false());
}

TEST_CASE("and/or flatten nested nodes of the same operator") {
  FormulaRef a = f_state(0), b = f_state(1), c = f_state(2);
  FormulaRef f = f_and(f_and(a, b), c);
  REQUIRE(f->op == Formula::Op::And);
  CHECK(f->args.size() == 3);
}

TEST_CASE("structural equality compares shape, not pointers") {
  FormulaRef a = f_state(0), b = f_state(1);
  CHECK(f_equal(f_and(a, b), f_and(f_state(0), f_state(1))));
  CHECK_FALSE(f_equal(f_and(a, b), f_and(b, a)));
  CHECK_FALSE(f_equal(a, f_input(0)));
  CHECK(f_equal(f_true(), f_const(true)));
}

TEST_CASE("eval of a constant ignores the valuation") {
  Valuation any(3, 0b101);
  CHECK(eval(f_true(), any));
  CHECK_FALSE(eval(f_false(), any));
}

TEST_CASE("eval handles negated conjunction over named bits") {
  // ack0=1, ack1=0 satisfies !(ack0 && ack1).
  Valuation v(2);
  v.set(0, true);   // ack0
  v.set(1, false);  // ack1
  CHECK(eval(f_not(f_and(f_state(0), f_state(1))), v));
  v.set(1, true);
  CHECK_FALSE(eval(f_not(f_and(f_state(0), f_state(1))), v));
}

TEST_CASE("eval covers primed refs, inputs, implication, iff, ite") {
  Valuation cur(1), nxt(1), in(1);
  cur.set(0, false);
  nxt.set(0, true);
  in.set(0, true);
  CHECK(eval(f_state(0, true), cur, nxt, std::nullopt));
  CHECK(eval(f_input(0), cur, std::nullopt, in));
  CHECK(eval(f_implies(f_state(0), f_false()), cur));
  CHECK(eval(f_iff(f_state(0), f_false()), cur));
  CHECK(eval(f_ite(f_input(0), f_state(0, true), f_false()), cur, nxt, in));
}

TEST_CASE("eval throws UnboundVariable for missing valuations") {
  Valuation cur(1);
  CHECK_THROWS_AS((void)eval(f_state(0, true), cur), UnboundVariable);
  CHECK_THROWS_AS((void)eval(f_input(0), cur), UnboundVariable);
  CHECK_THROWS_AS((void)eval(f_state(3), cur), UnboundVariable);
  Valuation in(0);
  CHECK_THROWS_AS((void)eval(f_input(0), cur, std::nullopt, in),
                  UnboundVariable);
}

TEST_CASE("valuation handles widths beyond one word") {
  Valuation v(80);
  CHECK(v.width() == 80);
  v.set(70, true);
  v.set(3, true);
  CHECK(v.get(70));
  CHECK(v.get(3));
  CHECK_FALSE(v.get(69));
  CHECK(v.low_bits() == 8);
  v.set(70, false);
  CHECK(v == Valuation(80, 8));
}

TEST_CASE("transition system rejects malformed definitions") {
  FormulaRef t = f_true();
  // Duplicate variable name.
  CHECK_THROWS_AS(TransitionSystem({"a", "a"}, {}, t, t), Error);
  // Name shared between a variable and an input.
  CHECK_THROWS_AS(TransitionSystem({"a"}, {"a"}, t, t), Error);
  // Init may not read primed variables or inputs.
  CHECK_THROWS_AS(TransitionSystem({"a"}, {"i"}, f_state(0, true), t), Error);
  CHECK_THROWS_AS(TransitionSystem({"a"}, {"i"}, f_input(0), t), Error);
  // Out-of-range references in the transition relation.
  CHECK_THROWS_AS(TransitionSystem({"a"}, {}, t, f_state(1)), Error);
  CHECK_THROWS_AS(TransitionSystem({"a"}, {}, t, f_input(0)), Error);
  // Next-state function list must cover every variable, unprimed only.
  CHECK_THROWS_AS(TransitionSystem({"a", "b"}, {}, t, t, {f_state(0)}), Error);
  CHECK_THROWS_AS(TransitionSystem({"a"}, {}, t, t, {f_state(0, true)}),
                  Error);
}

TEST_CASE("name lookups resolve to formula leaves") {
  TransitionSystem ts = counter2en();
  CHECK(ts.var_index("b1") == 1);
  CHECK(ts.input_index("en") == 0);
  CHECK_FALSE(ts.var_index("nope").has_value());
  CHECK(f_equal(ts.var("b0"), f_state(0)));
  CHECK(f_equal(ts.var("b1", true), f_state(1, true)));
  CHECK(f_equal(ts.input("en"), f_input(0)));
  CHECK_THROWS_AS((void)ts.var("en"), UnknownSignal);
  CHECK_THROWS_AS((void)ts.input("b0"), UnknownSignal);
}

TEST_CASE("successors of the identity relation is the state itself") {
  // Relational-only system: Tr == (a' <-> a).
  TransitionSystem ts({"a"}, {}, f_true(),
                      f_iff(f_state(0, true), f_state(0)));
  CHECK_FALSE(ts.is_functional());
  auto succ = successors(ts, State{Valuation(1, 0)});
  REQUIRE(succ.size() == 1);
  CHECK(succ[0].bits.low_bits() == 0);
  succ = successors(ts, State{Valuation(1, 1)});
  REQUIRE(succ.size() == 1);
  CHECK(succ[0].bits.low_bits() == 1);
}

TEST_CASE("successors of an empty relation is empty") {
  TransitionSystem ts({"a"}, {}, f_true(), f_false());
  CHECK(successors(ts, State{Valuation(1, 0)}).empty());
}

TEST_CASE("successors enumerates inputs and dedups results") {
  TransitionSystem ts = counter2en();
  // From 01 (b0=1): en=0 stays at 01, en=1 counts to 10.
  auto succ = successors(ts, State{Valuation(2, 1)});
  REQUIRE(succ.size() == 2);
  CHECK(succ[0].bits.low_bits() == 1);
  CHECK(succ[1].bits.low_bits() == 2);
  // Free-running counter: single successor regardless of state.
  auto one = successors(counter2(), State{Valuation(2, 3)});
  REQUIRE(one.size() == 1);
  CHECK(one[0].bits.low_bits() == 0);
}

TEST_CASE("successors refuses systems over the enumeration cap") {
  std::vector<std::string> vars;
  std::vector<FormulaRef> next;
  for (int i = 0; i < 30; ++i) {
    vars.push_back("v" + std::to_string(i));
    next.push_back(f_state(i));
  }
  TransitionSystem big(vars, {}, f_true(), f_true(), next);
  CHECK_THROWS_AS((void)successors(big, State{Valuation(30, 0)}, 20),
                  StateSpaceTooLarge);
  CHECK_NOTHROW((void)successors(big, State{Valuation(30, 0)}, 32));
}

TEST_CASE("brute force: trivially safe system holds") {
  TransitionSystem ts({"a"}, {}, f_true(), f_true(), {f_state(0)});
  auto res = brute_force_check(ts, f_true());
  CHECK(res.verdict == BruteVerdict::Holds);
  CHECK(res.visited == 2);  // both states are initial
  CHECK_FALSE(res.trace.has_value());
}

TEST_CASE("brute force: violation in an initial state is depth 0") {
  // Init == true, so a=1 is initial and already violates safe == !a.
  TransitionSystem ts({"a"}, {}, f_true(),
                      f_iff(f_state(0, true), f_state(0)));
  auto res = brute_force_check(ts, f_not(f_state(0)));
  REQUIRE(res.verdict == BruteVerdict::Violated);
  CHECK(res.depth == 0);
  REQUIRE(res.trace.has_value());
  CHECK(res.trace->states.size() == 1);
  CHECK(res.trace->inputs.size() == 1);
  CHECK(res.trace->states[0].bits.low_bits() == 1);
}

TEST_CASE("brute force: counter reaches 11 in exactly three steps") {
  auto safe = f_not(f_and(f_state(0), f_state(1)));
  auto res = brute_force_check(counter2(), safe);
  REQUIRE(res.verdict == BruteVerdict::Violated);
  CHECK(res.depth == 3);
  CHECK(res.visited == 4);
  REQUIRE(res.trace.has_value());
  REQUIRE(res.trace->states.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(res.trace->states[i].bits.low_bits() == static_cast<uint64_t>(i));
  CHECK(res.trace->inputs.size() == 4);
}

TEST_CASE("brute force: gated counter records the enabling inputs") {
  auto safe = f_not(f_and(f_state(0), f_state(1)));
  auto res = brute_force_check(counter2en(), safe);
  REQUIRE(res.verdict == BruteVerdict::Violated);
  CHECK(res.depth == 3);
  REQUIRE(res.trace.has_value());
  REQUIRE(res.trace->states.size() == 4);
  REQUIRE(res.trace->inputs.size() == 4);
  // The shortest path needs en=1 on every step; the final entry is the
  // input at the violating state and defaults to the lowest valuation
  // because `safe` does not read inputs.
  for (int i = 0; i < 3; ++i) CHECK(res.trace->inputs[i].low_bits() == 1);
  CHECK(res.trace->inputs[3].low_bits() == 0);
}

TEST_CASE("brute force: safe predicates may read inputs") {
  // safe == !(b0 && en): violated the first time b0=1 is paired with en=1,
  // i.e. at depth 1, with the witness input in the final trace slot.
  TransitionSystem ts = counter2en();
  auto safe = f_not(f_and(f_state(0), f_input(0)));
  auto res = brute_force_check(ts, safe);
  REQUIRE(res.verdict == BruteVerdict::Violated);
  CHECK(res.depth == 1);
  REQUIRE(res.trace.has_value());
  CHECK(res.trace->states[1].bits.low_bits() == 1);
  CHECK(res.trace->inputs[1].low_bits() == 1);
}

TEST_CASE("brute force: max_depth bounds the search") {
  auto safe = f_not(f_and(f_state(0), f_state(1)));
  BruteForceOptions opts;
  opts.max_depth = 2;
  auto res = brute_force_check(counter2(), safe, opts);
  CHECK(res.verdict == BruteVerdict::Holds);
  CHECK(res.depth == 2);
  opts.max_depth = 3;
  CHECK(brute_force_check(counter2(), safe, opts).verdict ==
        BruteVerdict::Violated);
}

TEST_CASE("brute force: state cap reports CapExceeded") {
  BruteForceOptions opts;
  opts.state_cap = 2;
  auto res = brute_force_check(counter2(), f_true(), opts);
  CHECK(res.verdict == BruteVerdict::CapExceeded);
  CHECK(res.visited == 2);
}

TEST_CASE("brute force: bit cap refuses wide systems") {
  std::vector<std::string> vars;
  std::vector<FormulaRef> next;
  for (int i = 0; i < 21; ++i) {
    vars.push_back("v" + std::to_string(i));
    next.push_back(f_state(i));
  }
  TransitionSystem big(vars, {}, f_true(), f_true(), next);
  CHECK_THROWS_AS((void)brute_force_check(big, f_true()),
                  StateSpaceTooLarge);
}

TEST_CASE("extend appends monitor bits without disturbing the base") {
  // Base: a' = !a starting at 0. Monitor m tracks the previous value of a.
  TransitionSystem base({"a"}, {}, f_not(f_state(0)), f_true(),
                        {f_not(f_state(0))});
  TransitionSystem ext = base.extend({"m"}, {f_state(0)}, {false});
  CHECK(ext.num_vars() == 2);
  CHECK(ext.var_index("m") == 1);
  REQUIRE(ext.is_functional());

  // With m copying a and a toggling, the run is 00 -> a=1,m=0 -> a=0,m=1
  // and then alternates between those two; a and m are never 1 together.
  auto s1 = successors(ext, State{Valuation(2, 0)});
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].bits.low_bits() == 1);
  auto s2 = successors(ext, s1[0]);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].bits.low_bits() == 2);

  auto holds = brute_force_check(ext, f_not(f_and(f_state(0), f_state(1))));
  CHECK(holds.verdict == BruteVerdict::Holds);
  CHECK(holds.visited == 3);

  // m first rises two steps in, so safe == !m fails at depth 2.
  auto res = brute_force_check(ext, f_not(f_state(1)));
  REQUIRE(res.verdict == BruteVerdict::Violated);
  CHECK(res.depth == 2);
  REQUIRE(res.trace.has_value());
  CHECK(res.trace->states[2].bits.low_bits() == 2);
}

TEST_CASE("parallel brute force matches the serial reference") {
  // An 8-bit shift-ish system with feedback, wide enough that BFS layers
  // have some width: v0' = in0, v[i]' = v[i-1] ^ (v7 && in1) for i>0.
  std::vector<std::string> vars;
  std::vector<FormulaRef> next;
  next.push_back(f_input(0));
  vars.push_back("v0");
  for (int i = 1; i < 8; ++i) {
    vars.push_back("v" + std::to_string(i));
    next.push_back(f_xor(f_state(i - 1), f_and(f_state(7), f_input(1))));
  }
  std::vector<FormulaRef> zeros;
  for (int i = 0; i < 8; ++i) zeros.push_back(f_not(f_state(i)));
  TransitionSystem ts(vars, {"in0", "in1"}, f_and(zeros), f_true(), next);

  // Violated: needs 1s shifted all the way through.
  auto safe = f_not(f_and(f_and(f_state(5), f_state(6)), f_state(7)));

  BruteForceOptions serial;
  serial.parallel = false;
  BruteForceOptions par;
  par.parallel = true;
  par.workers = 3;

  auto a = brute_force_check(ts, safe, serial);
  auto b = brute_force_check(ts, safe, par);
  CHECK(a.verdict == b.verdict);
  CHECK(a.visited == b.visited);
  CHECK(a.depth == b.depth);
  REQUIRE(a.trace.has_value());
  REQUIRE(b.trace.has_value());
  CHECK(a.trace->states == b.trace->states);
  CHECK(a.trace->inputs == b.trace->inputs);

  // Same agreement on a safe property: full fixpoint on both sides.
  auto ha = brute_force_check(ts, f_true(), serial);
  auto hb = brute_force_check(ts, f_true(), par);
  CHECK(ha.verdict == BruteVerdict::Holds);
  CHECK(hb.verdict == BruteVerdict::Holds);
  CHECK(ha.visited == hb.visited);
  CHECK(ha.depth == hb.depth);
}

TEST_CASE("state rendering lists name=bit pairs") {
  TransitionSystem ts = counter2();
  std::string s = state_str(ts, State{Valuation(2, 2)});
  CHECK(s.find("b0=0") != std::string::npos);
  CHECK(s.find("b1=1") != std::string::npos);
}
