#include <doctest.h>

#include "sccp/harness.hpp"

using namespace sccp;

namespace {

Atom at(const char* p, std::vector<Term> ts = {}) { return Atom{p, std::move(ts)}; }

Constraint soft(std::vector<Atom> atoms, Level l) {
  return Constraint::soft(PreConstraint{std::move(atoms)}, l);
}

Program example_T(const char* semiring, Mode mode) {
  Semiring s = Semiring::named(semiring);
  Program p;
  p.semiring = s;
  p.mode = mode;
  auto lvl = [&](const char* t) { return s.parse_level(t); };
  p.main_procs = {
      Process::tell(soft({at("c")}, lvl("0.7"))),
      Process::tell(soft({at("d")}, lvl("0.2"))),
      Process::sum({{soft({at("c")}, lvl("0.3")), Process::tell(soft({at("q1")}, s.top()))}}),
  };
  return p;
}

}  // namespace

TEST_CASE("adequacy on the worked fuzzy example") {
  Program p = example_T("fuzzy", Mode::Sell);
  Semiring fz = p.semiring;
  AdequacyResult r = adequacy_check(p, soft({at("c")}, fz.parse_level("0.3")), 20, 10);
  CHECK(r.barb);
  CHECK(r.provable);
  CHECK(r.verdict == AdequacyResult::Verdict::Agree);
}

TEST_CASE("adequacy on trivial and blocked programs") {
  Program p;
  p.semiring = Semiring::named("fuzzy");
  p.main_procs = {Process::tell(Constraint::one())};
  AdequacyResult r = adequacy_check(p, Constraint::one(), 10, 10);
  CHECK(r.barb);
  CHECK(r.provable);
  CHECK(r.verdict == AdequacyResult::Verdict::Agree);

  // ask [c]@1 then tell [d]@1 with an empty store: the guard never fires
  Program q;
  q.semiring = Semiring::named("fuzzy");
  Level top = q.semiring.top();
  q.main_procs = {Process::sum({{soft({at("c")}, top), Process::tell(soft({at("d")}, top))}})};
  AdequacyResult r2 = adequacy_check(q, soft({at("d")}, top), 12, 10);
  CHECK_FALSE(r2.barb);
  CHECK_FALSE(r2.barb_truncated);
  CHECK_FALSE(r2.provable);
  CHECK(r2.verdict == AdequacyResult::Verdict::Agree);
}

TEST_CASE("adequacy through a recursive definition") {
  // def relay(X) = ask [c(X)]@1 then tell [d(X)]@1; main = tell [c(a)]@1 || relay(a)
  Program p;
  p.semiring = Semiring::named("fuzzy");
  Level top = p.semiring.top();
  p.defs["relay"] = Definition{
      "relay",
      {"X"},
      Process::sum({{soft({at("c", {Term::var("X")})}, top),
                     Process::tell(soft({at("d", {Term::var("X")})}, top))}})};
  p.main_procs = {Process::tell(soft({at("c", {Term::constant("a")})}, top)),
                  Process::call("relay", {Term::constant("a")})};
  validate_program(p);
  AdequacyResult r =
      adequacy_check(p, soft({at("d", {Term::constant("a")})}, top), 24, 10);
  CHECK(r.barb);
  CHECK(r.provable);
  CHECK(r.verdict == AdequacyResult::Verdict::Agree);
}

TEST_CASE("cut elimination on the promotion permutation shape") {
  // !a1 F1 |- !a G   and   !d1 G1, !a G |- !b F   compose cut-free
  Semiring pr = Semiring::named("prob");
  Signature sig(pr);
  auto lv = [&](const char* t) { return SubIndex::lvl(pr.parse_level(t)); };
  Formula f1 = Formula::bang(lv("0.7"), Formula::atomic(at("g")));
  Formula cutf = Formula::bang(lv("0.5"), Formula::atomic(at("g")));
  Formula g1 = Formula::bang(lv("0.9"), Formula::atomic(at("h")));
  Formula goal = Formula::bang(
      lv("0.4"), Formula::tensor(Formula::bang(lv("0.4"), Formula::atomic(at("g"))),
                                 Formula::bang(lv("0.4"), Formula::atomic(at("h")))));
  CutCheckResult r = cut_check({f1}, {g1}, cutf, goal, sig, Mode::Sells, 12);
  CHECK(r.premises_ok);
  CHECK(r.cut_free);

  // a cut on One is trivially eliminable
  CutCheckResult r2 = cut_check({}, {Formula::bang(lv("1"), Formula::atomic(at("c")))},
                                Formula::one(), Formula::bang(lv("1"), Formula::atomic(at("c"))),
                                sig, Mode::Sells, 10);
  CHECK(r2.premises_ok);
  CHECK(r2.cut_free);
}

TEST_CASE("non-provability suite finds no violations") {
  NonProvabilityReport r = nonprovability_suite(Semiring::named("prob"), 40, 2024, 10);
  CHECK(r.marker_checked == 80);
  CHECK(r.marker_violations == 0);
  CHECK(r.weaken_mismatches == 0);
  CHECK(r.weaken_checked == 40);
  // the weakening equivalence should rarely be inconclusive at this size
  CHECK(r.weaken_inconclusive <= 4);
}

TEST_CASE("store and prover agree on a quick differential sample") {
  for (const char* sname : {"fuzzy", "prob", "weighted"}) {
    for (Mode mode : {Mode::Sell, Mode::Sells}) {
      DifferentialReport r = run_differential(Semiring::named(sname), mode, 25, 7);
      INFO(sname, " ", mode_name(mode), ": ",
           r.failures.empty() ? "" : r.failures[0]);
      CHECK(r.disagreements == 0);
      CHECK(r.truncated_excluded <= r.total / 10);
      CHECK(r.agreements + r.truncated_excluded == r.total);
      CHECK(r.store_true > 0);  // the sample exercises both verdicts
      CHECK(r.store_true < r.total);
    }
  }
}
