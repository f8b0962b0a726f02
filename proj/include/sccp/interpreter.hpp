#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sccp/store.hpp"

namespace sccp {

// A configuration (X; Gamma; store): hidden variables, pending process
// multiset, current store. Parallel compositions are kept flattened in
// procs, which realizes the structural congruence on || directly.
struct Configuration {
  std::set<std::string> hidden;
  std::vector<Process> procs;
  Store store;
};

struct Program {
  Semiring semiring = Semiring::named("crisp");
  Mode mode = Mode::Sell;
  std::vector<Axiom> axioms;
  std::map<std::string, Definition> defs;
  std::vector<Process> main_procs;
  int entail_bound = 3;  // axiom saturation rounds for guard checks
};

// Checks call resolution and arities, definition closure, and definition
// parameter distinctness; throws std::invalid_argument.
void validate_program(const Program& p);

enum class RuleTag { Tell, Sum, Local, Call, Equiv };
const char* rule_tag_name(RuleTag t);

struct StepResult {
  Configuration config;
  RuleTag rule = RuleTag::Tell;
  int proc_index = 0;
  int branch = -1;  // Sum: which ask branch fired
};

Configuration initial_config(const Program& p);

// Every successor of the configuration under the SOS rules. Alpha renaming
// for locals is folded into the Local rule: the binder always moves to a
// globally fresh hidden name.
std::vector<StepResult> step(const Program& p, const Configuration& c, NameSource& fresh);

// Independent single-rule checker used to re-validate traces; shares no
// logic with step().
bool check_step(const Program& p, const Configuration& from, const StepResult& to,
                std::string* why = nullptr);

struct Trace {
  Configuration initial;
  struct Entry {
    Configuration config;
    RuleTag rule;
    int proc_index;
    int branch;
  };
  std::vector<Entry> steps;
  bool truncated = false;  // stopped by max_steps with moves still enabled
};

struct ReachSet {
  std::vector<Configuration> configs;
  bool truncated = false;
};

// Breadth-first closure of ->* within max_steps transitions, visited-keyed
// on canonical configurations (alpha-renamed binders and hidden names,
// order-insensitive multisets).
ReachSet run_exhaustive(const Program& p, int max_steps, NameSource& fresh);

// One maximal run, choosing uniformly among enabled steps with the seed.
Trace run_random(const Program& p, std::uint64_t seed, int max_steps, NameSource& fresh);

struct BarbResult {
  bool found = false;
  bool truncated = false;  // false verdict within a truncated search is open
};

// P barbs c: some reachable store entails c with the hidden set quantified
// away (hidden names never occur in goals, so they act as fresh constants).
BarbResult barb(const Program& p, const Constraint& goal, int max_steps, NameSource& fresh);

// Canonical key: positional renaming of binders and hidden variables over
// the sorted process multiset and the eq-canonical store.
std::string canonical_key(const Configuration& c);

}  // namespace sccp
