// sccp: interpreter and logical toolkit for soft concurrent constraint
// programming. Subcommands: run, barb, entail, prove, check-laws, adequacy.
// Exit codes: 0 verdict produced, 1 truncated or inconclusive, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sccp/parser.hpp"
#include "sccp/report.hpp"

using namespace sccp;

namespace {

constexpr int kVerdict = 0;
constexpr int kTruncated = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Program load_program(const std::string& path) { return parse_program(slurp(path)); }

std::vector<Axiom> parse_axiom_flags(const std::vector<std::string>& texts, const Semiring& s) {
  std::vector<Axiom> out;
  for (const std::string& t : texts) {
    auto pos = t.find("=>");
    if (pos == std::string::npos) throw std::runtime_error("axiom needs '=>': " + t);
    Axiom ax;
    ax.premise = parse_constraint(t.substr(0, pos), s);
    ax.conclusion = parse_constraint(t.substr(pos + 2), s);
    std::set<std::string> vars = free_vars(ax.premise);
    vars.merge(free_vars(ax.conclusion));
    ax.vars.assign(vars.begin(), vars.end());
    out.push_back(std::move(ax));
  }
  return out;
}

void print_config(const Configuration& c) {
  std::cout << "  procs:";
  if (c.procs.empty()) std::cout << " (none)";
  for (const Process& p : c.procs) std::cout << "  {" << p.str() << "}";
  std::cout << "\n  store:";
  for (const StoreEntry& e : c.store.entries())
    std::cout << " [" << e.pre.str() << "]@" << e.level.str();
  if (!c.hidden.empty()) {
    std::cout << "\n  hidden:";
    for (const std::string& h : c.hidden) std::cout << " " << h;
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soft concurrent constraint programming toolkit"};
  app.require_subcommand(1);

  // ---- run ----
  auto* run_cmd = app.add_subcommand("run", "execute a program");
  std::string run_program, run_strategy = "random";
  std::uint64_t run_seed = 0;
  int run_max_steps = 1000;
  bool run_json = false;
  run_cmd->add_option("--program", run_program, "program file (.sccp)")->required();
  run_cmd->add_option("--strategy", run_strategy, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  run_cmd->add_option("--seed", run_seed, "random strategy seed");
  run_cmd->add_option("--max-steps", run_max_steps, "transition bound");
  run_cmd->add_flag("--json", run_json, "machine-readable output");

  // ---- barb ----
  auto* barb_cmd = app.add_subcommand("barb", "observable check: can the program output the goal");
  std::string barb_program, barb_goal;
  int barb_max_steps = 1000;
  barb_cmd->add_option("--program", barb_program)->required();
  barb_cmd->add_option("--goal", barb_goal, "constraint")->required();
  barb_cmd->add_option("--max-steps", barb_max_steps);

  // ---- entail ----
  auto* entail_cmd = app.add_subcommand("entail", "store entailment check");
  std::string entail_semiring = "crisp", entail_mode = "sell", entail_store, entail_goal;
  std::vector<std::string> entail_axioms;
  int entail_bound = 3;
  bool entail_trace = false;
  entail_cmd->add_option("--semiring", entail_semiring, "crisp | fuzzy | prob | weighted");
  entail_cmd->add_option("--mode", entail_mode, "sell | sells");
  entail_cmd->add_option("--store", entail_store, "constraint telling the store")->required();
  entail_cmd->add_option("--goal", entail_goal, "constraint to entail")->required();
  entail_cmd->add_option("--axiom", entail_axioms, "axiom 'premise => conclusion' (repeatable)");
  entail_cmd->add_option("--bound", entail_bound, "axiom saturation rounds");
  entail_cmd->add_flag("--trace", entail_trace, "dump the support analysis as JSON");

  // ---- prove ----
  auto* prove_cmd = app.add_subcommand("prove", "bounded sequent proof search");
  std::string prove_sequent, prove_semiring = "crisp", prove_mode = "sell";
  int prove_depth = 14, prove_budget = 2;
  bool prove_json = false;
  prove_cmd->add_option("--sequent", prove_sequent, "file with 'F, F |- G'")->required();
  prove_cmd->add_option("--semiring", prove_semiring);
  prove_cmd->add_option("--mode", prove_mode);
  prove_cmd->add_option("--depth", prove_depth, "choice-rule depth bound");
  prove_cmd->add_option("--copy-budget", prove_budget, "copies per unbounded formula");
  prove_cmd->add_flag("--json", prove_json, "print the proof as JSON");

  // ---- check-laws ----
  auto* laws_cmd = app.add_subcommand("check-laws", "semiring law suite");
  std::string laws_semiring = "all";
  int laws_samples = 1000;
  std::uint64_t laws_seed = 0xC0FFEE;
  bool laws_json = false;
  laws_cmd->add_option("--semiring", laws_semiring, "crisp | fuzzy | prob | weighted | all");
  laws_cmd->add_option("--samples", laws_samples);
  laws_cmd->add_option("--seed", laws_seed);
  laws_cmd->add_flag("--json", laws_json);

  // ---- adequacy ----
  auto* adq_cmd = app.add_subcommand("adequacy", "barb vs prover on the encoded sequent");
  std::string adq_program, adq_goal;
  int adq_depth = 22, adq_max_steps = 30;
  adq_cmd->add_option("--program", adq_program)->required();
  adq_cmd->add_option("--goal", adq_goal)->required();
  adq_cmd->add_option("--depth", adq_depth);
  adq_cmd->add_option("--max-steps", adq_max_steps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*run_cmd) {
      Program p = load_program(run_program);
      NameSource ns;
      if (run_strategy == "exhaustive") {
        ReachSet r = run_exhaustive(p, run_max_steps, ns);
        if (run_json) {
          std::cout << reach_json(r).dump(2) << "\n";
        } else {
          std::cout << r.configs.size() << " reachable configuration(s)"
                    << (r.truncated ? " (truncated)" : "") << "\n";
          for (const Configuration& c : r.configs) print_config(c);
        }
        return r.truncated ? kTruncated : kVerdict;
      }
      Trace t = run_random(p, run_seed, run_max_steps, ns);
      if (run_json) {
        std::cout << trace_json(t).dump(2) << "\n";
      } else {
        std::cout << "initial:\n";
        print_config(t.initial);
        for (const auto& e : t.steps) {
          std::cout << rule_tag_name(e.rule);
          if (e.rule == RuleTag::Sum) std::cout << "(" << e.branch << ")";
          std::cout << " on proc " << e.proc_index << ":\n";
          print_config(e.config);
        }
        if (t.truncated) std::cout << "(truncated at --max-steps)\n";
      }
      return t.truncated ? kTruncated : kVerdict;
    }

    if (*barb_cmd) {
      Program p = load_program(barb_program);
      Constraint goal = parse_constraint(barb_goal, p.semiring);
      NameSource ns;
      BarbResult r = barb(p, goal, barb_max_steps, ns);
      if (r.found) {
        std::cout << "true\n";
        return kVerdict;
      }
      std::cout << (r.truncated ? "truncated\n" : "false\n");
      return r.truncated ? kTruncated : kVerdict;
    }

    if (*entail_cmd) {
      Semiring s = Semiring::named(entail_semiring);
      Mode mode = mode_named(entail_mode);
      NameSource ns;
      Store st;
      st = st.add(parse_constraint(entail_store, s), s, ns);
      std::vector<Axiom> axioms = parse_axiom_flags(entail_axioms, s);
      Constraint goal = parse_constraint(entail_goal, s);
      EntailTrace tr = entails_traced(st, axioms, goal, mode, s, entail_bound);
      if (entail_trace) std::cout << entail_trace_json(tr).dump(2) << "\n";
      else std::cout << (tr.verdict ? "true" : "false") << "\n";
      return kVerdict;
    }

    if (*prove_cmd) {
      Semiring s = Semiring::named(prove_semiring);
      Mode mode = mode_named(prove_mode);
      Sequent seq = parse_sequent(slurp(prove_sequent), s);
      Signature sig(s);
      SearchLimits limits;
      limits.depth = prove_depth;
      limits.copy_budget = prove_budget;
      ProveResult r = prove(seq, sig, mode, limits);
      if (r.proof) {
        std::string why;
        if (!validate_proof(*r.proof, sig, mode, &why)) {
          std::cerr << "internal error: proof failed validation: " << why << "\n";
          return kUsage;
        }
        if (prove_json) std::cout << proof_json(*r.proof).dump(2) << "\n";
        else std::cout << "PROVED\n" << proof_json(*r.proof).dump(2) << "\n";
        return kVerdict;
      }
      std::cout << "NOT-PROVED" << (r.truncated ? " (truncated)" : "") << "\n";
      return r.truncated ? kTruncated : kVerdict;
    }

    if (*laws_cmd) {
      std::vector<std::string> names;
      if (laws_semiring == "all") names = {"crisp", "fuzzy", "prob", "weighted"};
      else names = {laws_semiring};
      bool all_ok = true;
      nlohmann::json out = nlohmann::json::array();
      for (const std::string& name : names) {
        LawReport r = run_law_suite(Semiring::named(name), laws_samples, laws_seed);
        all_ok = all_ok && r.all_passed();
        if (laws_json) {
          out.push_back(law_report_json(r));
        } else {
          for (const LawResult& l : r.laws) {
            if (!l.applicable) continue;
            std::cout << (l.failed == 0 ? "pass" : "FAIL") << "  " << r.semiring << ": " << l.law
                      << " (" << l.checked << " samples)\n";
          }
        }
      }
      if (laws_json) std::cout << out.dump(2) << "\n";
      return all_ok ? kVerdict : kTruncated;
    }

    if (*adq_cmd) {
      Program p = load_program(adq_program);
      Constraint goal = parse_constraint(adq_goal, p.semiring);
      AdequacyResult r = adequacy_check(p, goal, adq_depth, adq_max_steps);
      std::cout << adequacy_json(r).dump(2) << "\n";
      return r.verdict == AdequacyResult::Verdict::Inconclusive ? kTruncated : kVerdict;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
