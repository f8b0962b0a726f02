#include "sccp/harness.hpp"

#include <algorithm>

namespace sccp {

Sequent adequacy_sequent(const Program& p, const Constraint& goal) {
  Sequent seq;
  for (const Axiom& ax : p.axioms) seq.context.push_back(encode_axiom(ax, p.semiring));
  for (const auto& [name, def] : p.defs) {
    (void)name;
    seq.context.push_back(encode_definition(def));
  }
  for (const Process& proc : p.main_procs) seq.context.push_back(encode_process(proc));
  seq.goal = Formula::tensor(encode_constraint(goal), Formula::top());
  return seq;
}

AdequacyResult adequacy_check(const Program& p, const Constraint& goal, int depth, int max_steps) {
  AdequacyResult r;
  NameSource ns;
  BarbResult b = barb(p, goal, max_steps, ns);
  r.barb = b.found;
  r.barb_truncated = b.truncated;

  Signature sig(p.semiring);
  SearchLimits limits;
  limits.depth = depth;
  ProveResult pr = prove(adequacy_sequent(p, goal), sig, p.mode, limits);
  r.provable = pr.proof.has_value();
  r.prove_truncated = pr.truncated;

  bool barb_definitive = r.barb || !r.barb_truncated;
  bool prove_definitive = r.provable || !r.prove_truncated;
  if (barb_definitive && prove_definitive) {
    r.verdict = r.barb == r.provable ? AdequacyResult::Verdict::Agree
                                     : AdequacyResult::Verdict::Disagree;
  } else if (!barb_definitive && !prove_definitive) {
    r.verdict = AdequacyResult::Verdict::Inconclusive;
  } else if (barb_definitive && !r.barb) {
    // no barb at all, so the truncated prover's failure is consistent
    r.verdict = AdequacyResult::Verdict::Agree;
  } else if (prove_definitive && !r.provable) {
    r.verdict = AdequacyResult::Verdict::Agree;
  } else {
    r.verdict = AdequacyResult::Verdict::Inconclusive;
  }
  return r;
}

CutCheckResult cut_check(const std::vector<Formula>& gamma1, const std::vector<Formula>& gamma2,
                         const Formula& cut_formula, const Formula& goal, const Signature& sig,
                         Mode mode, int depth, int slack) {
  CutCheckResult r;
  SearchLimits limits;
  limits.depth = depth;
  ProveResult left = prove(Sequent{gamma1, cut_formula}, sig, mode, limits);
  std::vector<Formula> right_ctx = gamma2;
  right_ctx.push_back(cut_formula);
  ProveResult right = prove(Sequent{right_ctx, goal}, sig, mode, limits);
  if (!left.proof || !right.proof) {
    r.inconclusive = left.truncated || right.truncated;
    return r;
  }
  r.premises_ok = true;
  std::vector<Formula> ctx = gamma1;
  ctx.insert(ctx.end(), gamma2.begin(), gamma2.end());
  SearchLimits wide = limits;
  wide.depth = depth + slack;
  ProveResult conc = prove(Sequent{ctx, goal}, sig, mode, wide);
  r.cut_free = conc.proof.has_value();
  r.inconclusive = !r.cut_free && conc.truncated;
  return r;
}

namespace {

std::uint64_t mix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Level> level_pool(const Semiring& s) {
  switch (s.kind()) {
    case SemiringKind::Crisp:
      return {Level::crisp(false), Level::crisp(true)};
    case SemiringKind::Fuzzy:
    case SemiringKind::Prob: {
      std::vector<Level> out;
      for (const char* t : {"0", "0.1", "0.2", "0.5", "0.7", "1"}) out.push_back(s.parse_level(t));
      return out;
    }
    case SemiringKind::Weighted: {
      std::vector<Level> out;
      for (const char* t : {"-inf", "-7", "-5", "-2", "-1", "0"}) out.push_back(s.parse_level(t));
      return out;
    }
  }
  return {};
}

Level pick_level(const Semiring& s, std::uint64_t& state) {
  std::vector<Level> pool = level_pool(s);
  return pool[mix(state) % pool.size()];
}

// atoms over a tiny signature:两 nullary, one unary over constants a, b
Atom pick_atom(std::uint64_t& state, bool allow_var, bool& used_var) {
  switch (mix(state) % 4) {
    case 0: return Atom{"c", {}};
    case 1: return Atom{"d", {}};
    case 2: {
      const char* consts[] = {"a", "b"};
      return Atom{"p1", {Term::constant(consts[mix(state) % 2])}};
    }
    default:
      if (allow_var && mix(state) % 2 == 0) {
        used_var = true;
        return Atom{"p1", {Term::var("GX")}};
      }
      return Atom{"q1", {Term::constant(mix(state) % 2 ? "a" : "b")}};
  }
}

}  // namespace

NonProvabilityReport nonprovability_suite(const Semiring& s, int samples, std::uint64_t seed,
                                          int depth) {
  NonProvabilityReport report;
  std::uint64_t state = seed;
  Signature sig(s);
  SearchLimits limits;
  limits.depth = depth;
  limits.copy_budget = 2;
  limits.max_nodes = 200000;

  for (int i = 0; i < samples; ++i) {
    // Delta: constraints and possibly an axiom
    std::vector<Formula> delta;
    int entries = 1 + static_cast<int>(mix(state) % 3);
    for (int e = 0; e < entries; ++e) {
      bool dummy = false;
      Atom a = pick_atom(state, false, dummy);
      delta.push_back(
          encode_constraint(Constraint::soft(PreConstraint{{a}}, pick_level(s, state))));
    }
    if (mix(state) % 2 == 0) {
      Axiom ax;
      bool dummy = false;
      ax.premise = Constraint::soft(PreConstraint{{pick_atom(state, false, dummy)}},
                                    pick_level(s, state));
      ax.conclusion = Constraint::soft(PreConstraint{{pick_atom(state, false, dummy)}},
                                       pick_level(s, state));
      delta.push_back(encode_axiom(ax, s));
    }
    bool dummy = false;
    Constraint goal_c =
        Constraint::soft(PreConstraint{{pick_atom(state, false, dummy)}}, pick_level(s, state));
    Formula goal = encode_constraint(goal_c);

    // tell-free processes: a call, or an ask whose continuation is a call
    Process callp = Process::call("r", {Term::constant("a")});
    Process askp = Process::sum({{Constraint::soft(PreConstraint{{Atom{"c", {}}}},
                                                   pick_level(s, state)),
                                  callp}});
    Process proc = mix(state) % 2 ? callp : askp;
    Formula pf = encode_process(proc);

    for (const Formula& shape : {pf, pf.body()}) {
      std::vector<Formula> ctx = delta;
      ctx.push_back(shape);
      ProveResult r = prove(Sequent{ctx, goal}, sig, Mode::Sells, limits);
      ++report.marker_checked;
      if (r.proof) ++report.marker_violations;
    }

    // definition weakening: !u f adds nothing. Extra unbounded context is
    // admissible at the same depth, so a without-side proof must reappear on
    // the with side, and a definitive without-side failure must not turn
    // into a with-side proof; with-side truncation decides nothing.
    Definition def{"r", {"X"},
                   Process::sum({{Constraint::soft(PreConstraint{{Atom{"c", {}}}}, s.top()),
                                  Process::call("r", {Term::var("X")})}})};
    std::vector<Formula> with_def = delta;
    with_def.push_back(encode_definition(def));
    SearchLimits capped = limits;
    capped.max_nodes = 60000;
    ProveResult with_r = prove(Sequent{with_def, goal}, sig, Mode::Sells, capped);
    ProveResult without_r = prove(Sequent{delta, goal}, sig, Mode::Sells, capped);
    ++report.weaken_checked;
    if (without_r.proof) {
      if (!with_r.proof) ++report.weaken_mismatches;
    } else if (!without_r.truncated) {
      if (with_r.proof) ++report.weaken_mismatches;
    } else {
      ++report.weaken_inconclusive;
    }
  }
  return report;
}

DifferentialReport run_differential(const Semiring& s, Mode mode, int instances,
                                    std::uint64_t seed, int depth, int copy_budget) {
  DifferentialReport report;
  std::uint64_t state = seed;
  Signature sig(s);
  SearchLimits limits;
  limits.depth = depth;
  limits.copy_budget = copy_budget;
  limits.max_nodes = 250000;

  for (int i = 0; i < instances; ++i) {
    NameSource ns;
    Store store;
    int entries = 1 + static_cast<int>(mix(state) % 4);
    for (int e = 0; e < entries; ++e) {
      PreConstraint pre;
      int width = 1 + static_cast<int>(mix(state) % 2);
      bool dummy = false;
      for (int a = 0; a < width; ++a) {
        Atom atom = pick_atom(state, false, dummy);
        if (std::find(pre.atoms.begin(), pre.atoms.end(), atom) == pre.atoms.end())
          pre.atoms.push_back(atom);
      }
      store = store.add(Constraint::soft(pre, pick_level(s, state)), s, ns);
    }

    std::vector<Axiom> axioms;
    if (mix(state) % 2 == 0) {
      Axiom ax;
      bool prem_var = false;
      PreConstraint prem;
      prem.atoms.push_back(pick_atom(state, true, prem_var));
      if (mix(state) % 3 == 0) {
        bool dummy2 = false;
        Atom extra = pick_atom(state, false, dummy2);
        if (!(extra == prem.atoms[0])) prem.atoms.push_back(extra);
      }
      if (prem_var) ax.vars.push_back("GX");
      PreConstraint concl;
      concl.atoms.push_back(prem_var && mix(state) % 2 == 0 ? Atom{"q1", {Term::var("GX")}}
                                                            : [&] {
                                                                bool d2 = false;
                                                                return pick_atom(state, false, d2);
                                                              }());
      if (mix(state) % 3 == 0) {
        bool dummy3 = false;
        Atom extra = pick_atom(state, false, dummy3);
        if (!(extra == concl.atoms[0])) concl.atoms.push_back(extra);
      }
      ax.premise = Constraint::soft(prem, pick_level(s, state));
      ax.conclusion = Constraint::soft(concl, pick_level(s, state));
      axioms.push_back(ax);
    }

    // goal: 1-2 items, at most 3 atoms, at most one existential variable
    int item_count = 1 + static_cast<int>(mix(state) % 2);
    int atoms_left = 3;
    bool used_var = false;
    std::vector<Constraint> items;
    for (int it = 0; it < item_count && atoms_left > 0; ++it) {
      PreConstraint pre;
      int width = 1 + static_cast<int>(mix(state) % std::min(2, atoms_left));
      for (int a = 0; a < width; ++a) {
        Atom atom = pick_atom(state, !used_var, used_var);
        pre.atoms.push_back(atom);
        --atoms_left;
      }
      items.push_back(Constraint::soft(pre, pick_level(s, state)));
    }
    Constraint goal = items[0];
    for (std::size_t k = 1; k < items.size(); ++k) goal = Constraint::tensor(goal, items[k]);
    if (used_var) goal = Constraint::exists("GX", goal);

    bool store_says = entails(store, axioms, goal, mode, s, 3);

    Sequent seq;
    for (const Axiom& ax : axioms) seq.context.push_back(encode_axiom(ax, s));
    for (const Formula& f : encode_store(store)) seq.context.push_back(f);
    seq.goal = encode_constraint(goal);
    ProveResult pr = prove(seq, sig, mode, limits);

    ++report.total;
    if (store_says) ++report.store_true;
    if (!pr.proof && pr.truncated) {
      ++report.truncated_excluded;
      continue;
    }
    bool prover_says = pr.proof.has_value();
    if (pr.proof) {
      std::string why;
      if (!validate_proof(*pr.proof, sig, mode, &why)) {
        ++report.disagreements;
        if (report.failures.size() < 10)
          report.failures.push_back("proof failed validation: " + why);
        continue;
      }
    }
    if (prover_says == store_says) {
      ++report.agreements;
    } else {
      ++report.disagreements;
      if (report.failures.size() < 10) {
        std::string desc = "store=" + std::string(store_says ? "true" : "false") +
                           " prover=" + std::string(prover_says ? "true" : "false") + " goal " +
                           goal.str() + " store{ ";
        for (const auto& e : store.entries())
          desc += "[" + e.pre.str() + "]@" + e.level.str() + " ";
        desc += "}";
        for (const Axiom& ax : axioms) desc += " ax: " + ax.str();
        report.failures.push_back(desc);
      }
    }
  }
  return report;
}

}  // namespace sccp
