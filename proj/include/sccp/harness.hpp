#pragma once

#include "sccp/interpreter.hpp"
#include "sccp/prover.hpp"

namespace sccp {

// Runs both sides of the operational/logical correspondence: the bounded
// barb and the prover on  axioms, defs, encoded processes |- goal * top.
struct AdequacyResult {
  bool barb = false;
  bool barb_truncated = false;
  bool provable = false;
  bool prove_truncated = false;
  enum class Verdict { Agree, Disagree, Inconclusive } verdict = Verdict::Inconclusive;
};

AdequacyResult adequacy_check(const Program& p, const Constraint& goal, int depth, int max_steps);

// Builds the encoded sequent of the operational/logical correspondence (for the
// CLI and tests).
Sequent adequacy_sequent(const Program& p, const Constraint& goal);

// Cut admissibility probe: given Gamma1 |- F and Gamma2, F |- G provable
// within depth, the conclusion Gamma1, Gamma2 |- G must be provable cut-free
// within depth + slack.
struct CutCheckResult {
  bool premises_ok = false;
  bool cut_free = false;
  bool inconclusive = false;  // some side truncated
};

CutCheckResult cut_check(const std::vector<Formula>& gamma1, const std::vector<Formula>& gamma2,
                         const Formula& cut_formula, const Formula& goal, const Signature& sig,
                         Mode mode, int depth, int slack = 4);

// The non-provability suite: linear process markers never prove constraints
// (over tell-free processes, whose markers cannot dissolve into store
// content), and definition encodings weaken away without a matching call.
struct NonProvabilityReport {
  int marker_checked = 0;
  int marker_violations = 0;
  int weaken_checked = 0;
  int weaken_mismatches = 0;
  int weaken_inconclusive = 0;
};

NonProvabilityReport nonprovability_suite(const Semiring& s, int samples, std::uint64_t seed,
                                          int depth = 14);

// Differential harness: random stores, goals and axioms decided both by the
// store's support-cover procedure and by the sequent prover; every
// non-truncated pair must agree.
struct DifferentialReport {
  int total = 0;
  int store_true = 0;
  int agreements = 0;
  int disagreements = 0;
  int truncated_excluded = 0;
  std::vector<std::string> failures;
};

DifferentialReport run_differential(const Semiring& s, Mode mode, int instances,
                                    std::uint64_t seed, int depth = 24, int copy_budget = 3);

}  // namespace sccp
