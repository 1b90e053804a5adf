// SPDX-License-Identifier: Apache-2.0
//
// Elaboration tests. The centerpiece is a reference interpreter for the
// round-robin arbiter, transcribed statement by statement from the RTL; the
// elaborated transition system must agree with it on every (state, input)
// pair, both through the functional next-state view and the relation.

#include <doctest.h>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inductor/explicit_state.hpp"
#include "inductor/frontend.hpp"

using namespace inductor;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ElaboratedDesign elab(const std::string& text) {
  return elaborate(parse_design(text));
}

// Reference interpreter for the arbiter always block. Nonblocking
// assignments read the pre-edge state `s`; the reset task's blocking
// assignments never read a written register, so one pass suffices.
struct ArbState {
  bool req0, req1, ack0, ack1, robin;
};

ArbState arb_next(const ArbState& s, bool rst, bool ir0, bool ir1) {
  ArbState n = s;
  if (rst) {
    n.ack0 = false;
    n.ack1 = false;
    n.robin = false;
    n.req0 = ir0;
    n.req1 = ir1;
  } else {
    if (!s.req0) n.ack0 = false;
    else if (!s.req1) n.ack0 = true;
    else if (!s.ack0 && !s.ack1) n.ack0 = !s.robin;
    else n.ack0 = !s.ack0;

    if (!s.req1) n.ack1 = false;
    else if (!s.req0) n.ack1 = true;
    else if (!s.ack0 && !s.ack1) n.ack1 = s.robin;
    else n.ack1 = !s.ack1;

    if (s.req0 && s.req1 && !s.ack0 && !s.ack1) n.robin = !s.robin;
    n.req0 = ir0;  // outside the robin `if`: no begin/end around it
    n.req1 = ir1;
  }
  return n;
}

ArbState arb_unpack(uint64_t bits) {
  return {static_cast<bool>(bits & 1),        static_cast<bool>(bits >> 1 & 1),
          static_cast<bool>(bits >> 2 & 1),   static_cast<bool>(bits >> 3 & 1),
          static_cast<bool>(bits >> 4 & 1)};
}

Valuation arb_pack(const ArbState& s) {
  Valuation v(5);
  v.set(0, s.req0);
  v.set(1, s.req1);
  v.set(2, s.ack0);
  v.set(3, s.ack1);
  v.set(4, s.robin);
  return v;
}

}  // namespace

// --- Arbiter ---------------------------------------------------------------

TEST_CASE("arbiter elaborates to the declared state and input bits") {
  ElaboratedDesign d = elab(read_fixture("arbiter.sv"));
  CHECK(d.ts.vars() == std::vector<std::string>{"req0", "req1", "ack0",
                                                "ack1", "robin"});
  CHECK(d.ts.inputs() == std::vector<std::string>{"rst", "ir0", "ir1"});
  CHECK(d.clock == "clk");
  CHECK(d.ts.is_functional());
  CHECK_NOTHROW(validate(d.ts));

  // Declared properties ride along by name.
  REQUIRE(d.property_order == std::vector<std::string>{"prop"});
  CHECK(d.properties.count("prop") == 1);

  // Signal views: registers map to state leaves, ports to input leaves.
  Valuation sv = arb_pack({false, true, false, true, true});
  CHECK(eval(d.views.at("req1")[0], sv) == true);
  CHECK(eval(d.views.at("ack0")[0], sv) == false);
  CHECK(eval(d.views.at("robin")[0], sv) == true);
}

TEST_CASE("arbiter transitions match the reference interpreter") {
  ElaboratedDesign d = elab(read_fixture("arbiter.sv"));

  for (uint64_t sb = 0; sb < 32; ++sb) {
    ArbState s = arb_unpack(sb);
    Valuation sv = arb_pack(s);
    for (uint64_t ib = 0; ib < 8; ++ib) {
      bool rst = ib & 1, ir0 = ib >> 1 & 1, ir1 = ib >> 2 & 1;
      Valuation iv(3, ib);
      Valuation expect = arb_pack(arb_next(s, rst, ir0, ir1));

      bool fn_ok = true;
      for (int i = 0; i < 5; ++i)
        fn_ok = fn_ok &&
                eval(d.ts.next_function(i), sv, std::nullopt, iv) ==
                    expect.get(i);
      CAPTURE(sb);
      CAPTURE(ib);
      CHECK(fn_ok);

      // The relation holds exactly at the interpreter's successor.
      bool rel_ok = true;
      for (uint64_t nb = 0; nb < 32; ++nb) {
        Valuation nv(5, nb);
        rel_ok = rel_ok &&
                 eval(d.ts.trans(), sv, nv, iv) == (nv == expect);
      }
      CHECK(rel_ok);
    }
  }
}

TEST_CASE("arbiter initial states are the reset constants") {
  ElaboratedDesign d = elab(read_fixture("arbiter.sv"));
  // The reset task zeroes ack0/ack1/robin and ties req0/req1 to inputs, so
  // only the constants constrain Init; requests start free.
  for (uint64_t sb = 0; sb < 32; ++sb) {
    ArbState s = arb_unpack(sb);
    CHECK(eval(d.ts.init(), arb_pack(s)) ==
          (!s.ack0 && !s.ack1 && !s.robin));
  }
}

TEST_CASE("arbiter post-reset successors enumerate both reset polarities") {
  ElaboratedDesign d = elab(read_fixture("arbiter.sv"));

  // Post-reset state with both requests pending.
  ArbState s{true, true, false, false, false};

  // Hand step with rst=0, ir0=ir1=1: both requested, nobody acked, so ack0
  // gets !robin = 1, ack1 gets robin = 0, and robin flips.
  Valuation expect = arb_pack({true, true, true, false, true});
  Valuation iv(3);
  iv.set(1, true);  // ir0
  iv.set(2, true);  // ir1
  bool match = true;
  for (int i = 0; i < 5; ++i)
    match = match && eval(d.ts.next_function(i), arb_pack(s), std::nullopt,
                          iv) == expect.get(i);
  CHECK(match);

  // All successors over the 8 input valuations, against the interpreter.
  std::set<uint64_t> want;
  for (uint64_t ib = 0; ib < 8; ++ib)
    want.insert(
        arb_pack(arb_next(s, ib & 1, ib >> 1 & 1, ib >> 2 & 1)).low_bits());
  std::set<uint64_t> got;
  for (const State& n : successors(d.ts, State{arb_pack(s)}))
    got.insert(n.bits.low_bits());
  CHECK(got == want);
  CHECK(got == std::set<uint64_t>{0, 1, 2, 3, 20, 21, 22, 23});
}

TEST_CASE("arbiter safety facts via explicit search") {
  ElaboratedDesign d = elab(read_fixture("arbiter.sv"));

  // The acks are mutually exclusive in every reachable state.
  FormulaRef mutex = f_not(f_and(d.ts.var("ack0"), d.ts.var("ack1")));
  CHECK(brute_force_check(d.ts, mutex).verdict == BruteVerdict::Holds);

  // ack0 does rise: a request with ~req1 acks in one step.
  BruteForceResult r = brute_force_check(d.ts, f_not(d.ts.var("ack0")));
  REQUIRE(r.verdict == BruteVerdict::Violated);
  REQUIRE(r.trace.has_value());
  CHECK(r.trace->states.size() == 2);
  CHECK(r.depth == 1);
}

// --- Shapes and statement semantics ----------------------------------------

TEST_CASE("an empty always block holds every register") {
  ElaboratedDesign d = elab(
      "module m(clk); reg q; always @(posedge clk) begin end endmodule");
  CHECK(d.ts.vars() == std::vector<std::string>{"q"});
  CHECK(d.ts.inputs().empty());  // clk is the clock, not a system input
  CHECK(eval(d.ts.next_function(0), Valuation(1, 0)) == false);
  CHECK(eval(d.ts.next_function(0), Valuation(1, 1)) == true);
  // No reset construct: every state is initial.
  CHECK(eval(d.ts.init(), Valuation(1, 0)));
  CHECK(eval(d.ts.init(), Valuation(1, 1)));
}

TEST_CASE("a two-bit counter increments modulo four") {
  ElaboratedDesign d = elab(
      "module m(clk); reg [1:0] s; always @(posedge clk) s <= s + 1; "
      "endmodule");
  CHECK(d.ts.vars() == std::vector<std::string>{"s[0]", "s[1]"});
  REQUIRE(d.ts.source_map().size() == 2);
  CHECK(d.ts.source_map()[0].register_name == "s");
  CHECK(d.ts.source_map()[0].bit == 0);
  CHECK(d.ts.source_map()[1].bit == 1);

  for (uint64_t v = 0; v < 4; ++v) {
    uint64_t next = (v + 1) & 3;
    Valuation sv(2, v);
    CHECK(eval(d.ts.next_function(0), sv) == static_cast<bool>(next & 1));
    CHECK(eval(d.ts.next_function(1), sv) ==
          static_cast<bool>(next >> 1 & 1));
  }
}

TEST_CASE("blocking assignments update the read view in order") {
  ElaboratedDesign d = elab(
      "module m(clk); reg a, b;\n"
      "always @(posedge clk) begin a = !a; b <= a; end endmodule");
  // b' samples the value a just took, so both next bits are !a.
  for (uint64_t v = 0; v < 4; ++v) {
    bool a = v & 1;
    Valuation sv(2, v);
    CHECK(eval(d.ts.next_function(0), sv) == !a);
    CHECK(eval(d.ts.next_function(1), sv) == !a);
  }
}

TEST_CASE("task calls inline the task body") {
  ElaboratedDesign d = elab(
      "module m(clk); reg q;\n"
      "task flip; q <= !q; endtask\n"
      "always @(posedge clk) flip;\n"
      "endmodule");
  CHECK(eval(d.ts.next_function(0), Valuation(1, 0)) == true);
  CHECK(eval(d.ts.next_function(0), Valuation(1, 1)) == false);
}

TEST_CASE("bit-select assignments update a single bit") {
  ElaboratedDesign d = elab(
      "module m(clk); reg [1:0] s; always @(posedge clk) s[0] <= !s[1]; "
      "endmodule");
  for (uint64_t v = 0; v < 4; ++v) {
    bool s1 = v >> 1 & 1;
    Valuation sv(2, v);
    CHECK(eval(d.ts.next_function(0), sv) == !s1);
    CHECK(eval(d.ts.next_function(1), sv) == s1);  // untouched bit holds
  }

  CHECK_THROWS_AS(
      elab("module m(clk); reg [1:0] s; always @(posedge clk) s[2] <= 1; "
           "endmodule"),
      UnsupportedConstruct);
}

TEST_CASE("wires substitute their definitions in dependency order") {
  ElaboratedDesign d = elab(
      "module m(clk,i,o);\n"
      "  input clk, i;\n"
      "  output o;\n"
      "  reg q; wire w;\n"
      "  assign o = w;\n"
      "  assign w = q ^ i;\n"
      "  always @(posedge clk) q <= w;\n"
      "endmodule");
  CHECK(d.ts.inputs() == std::vector<std::string>{"i"});
  for (uint64_t qb = 0; qb < 2; ++qb)
    for (uint64_t ib = 0; ib < 2; ++ib)
      CHECK(eval(d.ts.next_function(0), Valuation(1, qb), std::nullopt,
                 Valuation(1, ib)) == static_cast<bool>(qb ^ ib));
  // The undeclared-width output view resolved through the wire chain.
  CHECK(d.views.count("o") == 1);

  // A wire may be used textually before its definition.
  ElaboratedDesign d2 = elab(
      "module m(clk); reg q; wire gate, inv;\n"
      "assign gate = inv && q;\n"
      "assign inv = !q;\n"
      "always @(posedge clk) q <= gate;\n"
      "endmodule");
  CHECK(eval(d2.ts.next_function(0), Valuation(1, 0)) == false);
  CHECK(eval(d2.ts.next_function(0), Valuation(1, 1)) == false);
}

TEST_CASE("parameters fold into widths and expressions") {
  ElaboratedDesign d = elab(
      "module m(clk); parameter W = 1; parameter TOP = 2;\n"
      "reg [W:0] s;\n"
      "always @(posedge clk) begin\n"
      "  if (s == TOP) s <= 0; else s <= s + 1;\n"
      "end endmodule");
  // Counter that wraps at TOP=2: 0,1,2,0,...  (3 never re-enters).
  for (uint64_t v = 0; v < 4; ++v) {
    uint64_t next = v == 2 ? 0 : (v + 1) & 3;
    Valuation sv(2, v);
    CHECK(eval(d.ts.next_function(0), sv) == static_cast<bool>(next & 1));
    CHECK(eval(d.ts.next_function(1), sv) ==
          static_cast<bool>(next >> 1 & 1));
  }
}

TEST_CASE("multi-bit inputs explode into named bits") {
  ElaboratedDesign d = elab(
      "module m(clk,d);\n"
      "  input clk;\n"
      "  input [1:0] d;\n"
      "  reg q;\n"
      "  always @(posedge clk) q <= d[1];\n"
      "endmodule");
  CHECK(d.ts.inputs() == std::vector<std::string>{"d[0]", "d[1]"});
  Valuation sv(1, 0);
  CHECK(eval(d.ts.next_function(0), sv, std::nullopt, Valuation(2, 2)) ==
        true);
  CHECK(eval(d.ts.next_function(0), sv, std::nullopt, Valuation(2, 1)) ==
        false);
}

TEST_CASE("conditions OR-reduce multi-bit operands") {
  ElaboratedDesign d = elab(
      "module m(clk); reg [1:0] s; reg q;\n"
      "always @(posedge clk) begin\n"
      "  if (s) q <= 1; else q <= 0;\n"
      "  s <= s + 1;\n"
      "end endmodule");
  // q' = (s != 0); s occupies var indices 0,1 and q index 2.
  for (uint64_t v = 0; v < 4; ++v) {
    Valuation sv(3, v);  // q = 0
    CHECK(eval(d.ts.next_function(2), sv) == (v != 0));
  }
}

// --- Reset handling ----------------------------------------------------

TEST_CASE("a reset branch defines the initial states") {
  ElaboratedDesign d = elab(
      "module m(clk,rst);\n"
      "  input clk, rst;\n"
      "  reg a, b;\n"
      "  always @(posedge clk) begin\n"
      "    if (rst) begin a <= 1; end\n"
      "    else begin a <= !a; b <= a; end\n"
      "  end endmodule");
  // a starts at 1; b is untouched by reset and starts free.
  CHECK(eval(d.ts.init(), Valuation(2, 1)) == true);   // a=1 b=0
  CHECK(eval(d.ts.init(), Valuation(2, 3)) == true);   // a=1 b=1
  CHECK(eval(d.ts.init(), Valuation(2, 0)) == false);  // a=0
  CHECK(eval(d.ts.init(), Valuation(2, 2)) == false);

  // "reset" is recognized the same way.
  ElaboratedDesign d2 = elab(
      "module m(clk,reset);\n"
      "  input clk, reset;\n"
      "  reg a;\n"
      "  always @(posedge clk) begin\n"
      "    if (reset) a <= 0; else a <= !a;\n"
      "  end endmodule");
  CHECK(eval(d2.ts.init(), Valuation(1, 0)) == true);
  CHECK(eval(d2.ts.init(), Valuation(1, 1)) == false);
}

TEST_CASE("reset detection requires a bare input of that name") {
  // An internal register called rst is ordinary logic.
  ElaboratedDesign d = elab(
      "module m(clk); reg rst; reg q;\n"
      "always @(posedge clk) begin\n"
      "  if (rst) q <= 0; else q <= 1;\n"
      "end endmodule");
  for (uint64_t v = 0; v < 4; ++v) CHECK(eval(d.ts.init(), Valuation(2, v)));

  // A negated or compound condition is not the reset construct either.
  ElaboratedDesign d2 = elab(
      "module m(clk,rst);\n"
      "  input clk, rst;\n"
      "  reg q;\n"
      "  always @(posedge clk) begin\n"
      "    if (!rst) q <= !q; else q <= 0;\n"
      "  end endmodule");
  CHECK(eval(d2.ts.init(), Valuation(1, 0)));
  CHECK(eval(d2.ts.init(), Valuation(1, 1)));
}

// --- Rejected designs -----------------------------------------------------

TEST_CASE("elaborate rejects ill-formed designs with specific messages") {
  auto reject = [](const std::string& text, const std::string& needle) {
    try {
      elab(text);
      FAIL("expected ElaborationError mentioning ", needle);
    } catch (const ElaborationError& e) {
      CAPTURE(needle);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  reject(
      "module m(clk); reg q; always @(posedge clk) q <= 1; "
      "always @(posedge clk) q <= 0; endmodule",
      "multiple always blocks");
  reject(
      "module m(clk,c2); input clk, c2; reg a, b; "
      "always @(posedge clk) a <= 1; always @(posedge c2) b <= 1; "
      "endmodule",
      "different clocks");
  reject(
      "module m(clk); reg q; always @(posedge q) q <= 1; endmodule",
      "not an input port");
  reject(
      "module m(clk); reg q; wire w; assign w = q; assign w = !q; "
      "endmodule",
      "driven twice");
  reject("module m(clk); reg q; assign q = 1; endmodule",
         "drives register");
  reject(
      "module m(clk,i); input clk, i; reg q; assign i = q; "
      "always @(posedge clk) q <= q; endmodule",
      "drives input");
  reject(
      "module m(clk); reg q; wire w; always @(posedge clk) w <= 1; "
      "endmodule",
      "non-register");
  reject(
      "module m(clk); reg q; always @(posedge clk) begin q <= 1; q = 0; "
      "end endmodule",
      "after a nonblocking");
  reject("module m(clk); reg q; always @(posedge clk) spin; endmodule",
         "unknown task");
  reject(
      "module m(clk); reg q; task t; t; endtask "
      "always @(posedge clk) t; endmodule",
      "recursive task");
  reject(
      "module m(clk); reg q; wire w, v; assign w = v; assign v = w; "
      "always @(posedge clk) q <= w; endmodule",
      "combinational cycle");
  reject("module m(clk); reg q, q; endmodule", "declared twice");
  reject("module m(clk); reg q; wire q; endmodule", "declared twice");
  reject("module m(clk,a); input clk, a; reg a; endmodule", "input port");
}

TEST_CASE("nonblocking before blocking is fine across branches") {
  // The arbiter pattern: blocking writes in the reset task, nonblocking in
  // the other branch. Only a blocking write after a nonblocking one on the
  // same path is rejected.
  ElaboratedDesign d = elab(
      "module m(clk,rst);\n"
      "  input clk, rst;\n"
      "  reg q;\n"
      "  task init_q; q = 0; endtask\n"
      "  always @(posedge clk) begin\n"
      "    if (rst) init_q;\n"
      "    else q <= !q;\n"
      "  end endmodule");
  // rst=1 → q'=0; rst=0 → q'=!q.
  Valuation rst_on(1, 1), rst_off(1, 0);
  CHECK(eval(d.ts.next_function(0), Valuation(1, 1), std::nullopt, rst_on) ==
        false);
  CHECK(eval(d.ts.next_function(0), Valuation(1, 1), std::nullopt,
             rst_off) == false);
  CHECK(eval(d.ts.next_function(0), Valuation(1, 0), std::nullopt,
             rst_off) == true);

  // Blocking then nonblocking on one path is also legal (commit order is
  // preserved: the nonblocking value wins at the edge).
  ElaboratedDesign d2 = elab(
      "module m(clk); reg q;\n"
      "always @(posedge clk) begin q = 0; q <= 1; end endmodule");
  CHECK(eval(d2.ts.next_function(0), Valuation(1, 0)) == true);
}
