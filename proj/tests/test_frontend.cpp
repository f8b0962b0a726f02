#include <doctest.h>

#include "sccp/parser.hpp"

using namespace sccp;

namespace {
const Semiring FZ = Semiring::named("fuzzy");
Atom at(const char* p, std::vector<Term> ts = {}) { return Atom{p, std::move(ts)}; }
}  // namespace

TEST_CASE("the worked example program parses to the expected shape") {
  Program p = parse_program(
      "semiring fuzzy; mode sell; "
      "main = tell [c]@0.7 || tell [d]@0.2 || "
      "ask [c]@0.3 then tell [q1]@1 + ask [c * d]@0.5 then tell [q2]@1;");
  CHECK(p.semiring.name() == "fuzzy");
  CHECK(p.mode == Mode::Sell);
  REQUIRE(p.main_procs.size() == 1);
  Configuration init = initial_config(p);
  REQUIRE(init.procs.size() == 3);
  CHECK(init.procs[0] == Process::tell(Constraint::soft(PreConstraint{{at("c")}},
                                                        FZ.parse_level("0.7"))));
  CHECK(init.procs[2].kind() == Process::Kind::Sum);
  CHECK(init.procs[2].branches().size() == 2);
  CHECK(init.procs[2].branches()[1].guard ==
        Constraint::soft(PreConstraint{{at("c"), at("d")}}, FZ.parse_level("0.5")));
}

TEST_CASE("minimal program and defaults") {
  Program p = parse_program("main = tell 1;");
  CHECK(p.semiring.name() == "crisp");
  CHECK(p.mode == Mode::Sell);
  REQUIRE(p.main_procs.size() == 1);
  CHECK(p.main_procs[0] == Process::tell(Constraint::one()));
}

TEST_CASE("recursive definitions parse and validate") {
  Program p = parse_program(
      "semiring fuzzy; def p(X) = ask [c(X)]@0.3 then p(X); main = p(a);");
  REQUIRE(p.defs.count("p"));
  CHECK(p.defs["p"].params == std::vector<std::string>{"X"});
  CHECK(p.main_procs[0] == Process::call("p", {Term::constant("a")}));
}

TEST_CASE("axioms parse with implicit quantification") {
  Program p = parse_program(
      "semiring fuzzy; axiom [leq(X, Y)]@top => [leq(X, s(Y))]@top; main = tell 1;");
  REQUIRE(p.axioms.size() == 1);
  CHECK(p.axioms[0].vars == std::vector<std::string>{"X", "Y"});
  CHECK(free_vars(p.axioms[0].conclusion) == std::set<std::string>{"X", "Y"});
}

TEST_CASE("eq sugar and eq level restriction") {
  Constraint c = parse_constraint("X = f(Y)", FZ);
  CHECK(c == Constraint::soft(
                 PreConstraint{{at("eq", {Term::var("X"), Term::fun("f", {Term::var("Y")})})}},
                 FZ.top()));
  CHECK_NOTHROW(parse_constraint("[eq(X, Y)]@1", FZ));
  CHECK_THROWS_AS(parse_constraint("[eq(X, Y)]@0.5", FZ), ParseError);
}

TEST_CASE("levels parse through the declared semiring") {
  CHECK_THROWS_AS(parse_program("semiring fuzzy; main = tell [c]@1.5;"), ParseError);
  CHECK_THROWS_AS(parse_program("semiring weighted; main = tell [c]@2;"), ParseError);
  CHECK_NOTHROW(parse_program("semiring weighted; main = tell [c]@-inf;"));
  CHECK_NOTHROW(parse_program("semiring weighted; main = tell [c]@-2;"));
  CHECK_NOTHROW(parse_program("semiring prob; main = tell [c]@7/10;"));
  CHECK_NOTHROW(parse_program("semiring crisp; main = tell [c]@true;"));
}

TEST_CASE("parse errors carry positions and reasons") {
  CHECK_THROWS_WITH_AS(parse_program("main = tell [c]@;"), doctest::Contains("level"),
                       ParseError);
  CHECK_THROWS_AS(parse_program("main = tell [c]@0.5"), ParseError);  // missing ';'
  CHECK_THROWS_AS(parse_program("semiring fuzzy; main = ask [c]@1;"), ParseError);
  CHECK_THROWS_AS(parse_program("def p() = tell 1; def p() = tell 1; main = p();"), ParseError);
  CHECK_THROWS_AS(parse_program("main = p(a);"), std::invalid_argument);  // unresolved call
  CHECK_THROWS_AS(parse_program("semiring fuzzy; main = tell [c(a)]@1 || tell [c(a, b)]@1;"),
                  ParseError);  // arity clash
  CHECK_THROWS_AS(parse_program("semiring fuzzy; main = tell [_x]@1;"), ParseError);
  CHECK_THROWS_AS(parse_program("semiring fuzzy; axiom (ex X. [p(X)]@1) => [q]@1; main = tell 1;"),
                  ParseError);  // quantified axiom side
  try {
    parse_program("semiring fuzzy;\nmain = tell [c]@oops;");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() > 0);
  }
}

TEST_CASE("nested processes parse with the documented precedence") {
  Program p = parse_program(
      "semiring fuzzy; main = new X in (tell [p(X)]@1 || ask [p(X)]@1 then tell [q]@1);");
  REQUIRE(p.main_procs.size() == 1);
  CHECK(p.main_procs[0].kind() == Process::Kind::Local);
  CHECK(p.main_procs[0].body().kind() == Process::Kind::Par);
}

TEST_CASE("prover formulas and sequents parse") {
  Semiring pr = Semiring::named("prob");
  Formula f = parse_formula("!{0.7} c * !{p} (!{0.3} c -o !{p} 1)", pr);
  CHECK(f.kind() == Formula::Kind::Tensor);
  CHECK(f.lhs() == Formula::bang(SubIndex::lvl(pr.parse_level("0.7")),
                                 Formula::atomic(at("c"))));
  Sequent s = parse_sequent("!{0.7} c, !{0.2} d |- !{0.14} (!{0.14} c * !{0.14} d)", pr);
  CHECK(s.context.size() == 2);
  CHECK(s.goal.kind() == Formula::Kind::Bang);
  Sequent empty_ctx = parse_sequent("|- 1", pr);
  CHECK(empty_ctx.context.empty());
  Formula q = parse_formula("all X. (!{d} r(X) -o top) & 1", pr);
  CHECK(q.kind() == Formula::Kind::Forall);
}

// random AST generator for the round-trip property
namespace {

std::uint64_t mix2(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Term rand_term(std::uint64_t& s, int depth) {
  switch (mix2(s) % (depth > 0 ? 3 : 2)) {
    case 0: return Term::var(std::string(1, static_cast<char>('X' + mix2(s) % 3)));
    case 1: return Term::constant(std::string(1, static_cast<char>('a' + mix2(s) % 3)));
    default: {
      std::vector<Term> args;
      int n = 1 + static_cast<int>(mix2(s) % 2);
      for (int i = 0; i < n; ++i) args.push_back(rand_term(s, depth - 1));
      return Term::fun("f" + std::to_string(n), std::move(args));
    }
  }
}

Constraint rand_constraint(std::uint64_t& s, int depth) {
  switch (mix2(s) % (depth > 0 ? 4 : 2)) {
    case 0: return Constraint::one();
    case 1: {
      PreConstraint pre;
      int n = 1 + static_cast<int>(mix2(s) % 2);
      for (int i = 0; i < n; ++i)
        pre.atoms.push_back(Atom{"p" + std::to_string(mix2(s) % 2), {rand_term(s, 1)}});
      const char* levels[] = {"0.2", "0.5", "1", "0"};
      return Constraint::soft(std::move(pre), FZ.parse_level(levels[mix2(s) % 4]));
    }
    case 2:
      return Constraint::tensor(rand_constraint(s, depth - 1), rand_constraint(s, depth - 1));
    default:
      return Constraint::exists(std::string(1, static_cast<char>('X' + mix2(s) % 3)),
                                rand_constraint(s, depth - 1));
  }
}

Process rand_process(std::uint64_t& s, int depth) {
  switch (mix2(s) % (depth > 0 ? 5 : 2)) {
    case 0: return Process::tell(rand_constraint(s, 1));
    case 1: return Process::call("proc", {rand_term(s, 0)});
    case 2: {
      std::vector<ProcessBranch> branches;
      int n = 1 + static_cast<int>(mix2(s) % 2);
      for (int i = 0; i < n; ++i)
        branches.push_back(ProcessBranch{rand_constraint(s, 1), rand_process(s, depth - 1)});
      return Process::sum(std::move(branches));
    }
    case 3: return Process::par(rand_process(s, depth - 1), rand_process(s, depth - 1));
    default:
      return Process::local(std::string(1, static_cast<char>('X' + mix2(s) % 3)),
                            rand_process(s, depth - 1));
  }
}

}  // namespace

TEST_CASE("print/parse round-trip on random constraints and processes") {
  std::uint64_t s = 0xFEED;
  for (int i = 0; i < 300; ++i) {
    Constraint c = rand_constraint(s, 3);
    Constraint back = parse_constraint(c.str(), FZ);
    INFO(c.str());
    CHECK(back == c);
  }
  for (int i = 0; i < 300; ++i) {
    Process p = rand_process(s, 3);
    std::string text = p.str();
    INFO(text);
    // parse in a program context so calls resolve
    Program prog = parse_program("semiring fuzzy; def proc(X) = tell 1; main = " + text + ";");
    CHECK(prog.main_procs[0] == p);
  }
}
