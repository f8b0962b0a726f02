#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sccp/ast.hpp"
#include "sccp/store.hpp"

namespace sccp {

// A subexponential index of the completed signature: a semiring level, the
// process/call/definition markers, or the two elements that close the
// completion into a c-semiring.
struct SubIndex {
  enum class Kind { Level, ProcMark, CallMark, DefMark, BotC, TopC };
  Kind kind = Kind::TopC;
  Level level = Level::crisp(true);

  static SubIndex lvl(Level l) { return {Kind::Level, std::move(l)}; }
  static SubIndex proc() { return {Kind::ProcMark, Level::crisp(true)}; }
  static SubIndex call() { return {Kind::CallMark, Level::crisp(true)}; }
  static SubIndex def() { return {Kind::DefMark, Level::crisp(true)}; }
  static SubIndex bot_c() { return {Kind::BotC, Level::crisp(true)}; }
  static SubIndex top_c() { return {Kind::TopC, Level::crisp(true)}; }

  bool operator==(const SubIndex& o) const {
    if (kind != o.kind) return false;
    return kind != Kind::Level || level == o.level;
  }
  std::string str() const;
};

struct FormulaNode;

// The SELL fragment: atoms, 1, top, tensor, n-ary with, lolli, quantifiers,
// and subexponential bangs.
class Formula {
 public:
  enum class Kind { Atomic, One, Top, Tensor, With, Lolli, Exists, Forall, Bang };

  static Formula atomic(Atom a);
  static Formula one();
  static Formula top();
  static Formula tensor(Formula lhs, Formula rhs);
  static Formula with(std::vector<Formula> parts);  // non-empty
  static Formula lolli(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula bang(SubIndex idx, Formula body);

  Kind kind() const;
  const Atom& atom() const;
  Formula lhs() const;
  Formula rhs() const;
  const std::vector<Formula>& parts() const;
  const std::string& var() const;
  Formula body() const;
  const SubIndex& index() const;

  bool operator==(const Formula& o) const;
  std::string str() const;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FormulaNode> node_;
};

std::set<std::string> free_vars(const Formula& f);
Formula substitute(const Formula& f, const Subst& map, NameSource& fresh);

// Subexponential signature completed to a c-semiring: the semiring levels
// ordered by leq, the unrelated markers p/d/u, and botc/topc at the ends.
// U is every level plus u and topc.
class Signature {
 public:
  explicit Signature(Semiring s) : s_(std::move(s)) {}
  const Semiring& semiring() const { return s_; }

  bool preceq(const SubIndex& a, const SubIndex& b) const;
  bool unbounded(const SubIndex& a) const;
  // Product of the completion; unit topc, and any marker collapses to botc.
  SubIndex completed_times(const SubIndex& a, const SubIndex& b) const;
  // Side condition of the promotion rule over the given context indices.
  bool promotion_ok(const std::vector<SubIndex>& ctx, const SubIndex& target, Mode mode) const;

 private:
  Semiring s_;
};

bool check_promotion(const std::vector<SubIndex>& ctx, const SubIndex& target, Mode mode,
                     const Signature& sig);

struct Sequent {
  std::vector<Formula> context;
  Formula goal = Formula::one();
  std::string str() const;
};

struct PromotionWitness {
  SubIndex target;
  std::vector<SubIndex> kept;
  std::string bound;  // printed fold of the kept indices
};

struct ProofNode {
  std::string rule;
  Sequent sequent;
  std::vector<ProofNode> premises;
  std::optional<PromotionWitness> promotion;
  std::optional<Term> term;     // exists_R / forall_L witness
  std::string eigen;            // exists_L / forall_R eigenvariable
  int pick = -1;                // with_L component
};

struct SearchLimits {
  int depth = 14;        // choice-rule applications along a branch
  int copy_budget = 2;   // copies per unbounded context formula occurrence
  long max_nodes = 2000000;
};

struct ProveResult {
  std::optional<ProofNode> proof;
  bool truncated = false;  // a failing branch hit depth/copy/node limits
  long nodes = 0;
};

ProveResult prove(const Sequent& seq, const Signature& sig, Mode mode,
                  const SearchLimits& limits = {});

// Validates a proof tree node by node against the rule schemas (including
// promotion side conditions); independent of the search code paths.
bool validate_proof(const ProofNode& root, const Signature& sig, Mode mode, std::string* why = nullptr);

// Process / axiom / definition encodings into SELL formulas.
Formula encode_constraint(const Constraint& c);
Formula encode_process(const Process& p);
Formula encode_definition(const Definition& d);
Formula encode_axiom(const Axiom& ax, const Semiring& s);
std::vector<Formula> encode_store(const Store& st);

}  // namespace sccp
