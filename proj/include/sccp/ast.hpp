#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sccp/semiring.hpp"

namespace sccp {

// Fresh-name supply: a monotone counter per run, printed _v0, _v1, ...
// Deterministic given traversal order, so traces are reproducible.
struct NameSource {
  int next = 0;
  std::string fresh() { return "_v" + std::to_string(next++); }
};

struct Term {
  enum class Kind { Var, Const, Fun };
  Kind kind = Kind::Const;
  std::string name;
  std::vector<Term> args;  // Fun only

  static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static Term constant(std::string n) { return {Kind::Const, std::move(n), {}}; }
  static Term fun(std::string n, std::vector<Term> as) { return {Kind::Fun, std::move(n), std::move(as)}; }

  bool operator==(const Term& o) const;
  bool operator<(const Term& o) const;  // total order used for canonical choices
  std::string str() const;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool is_eq() const { return pred == "eq" && args.size() == 2; }
  bool operator==(const Atom& o) const { return pred == o.pred && args == o.args; }
  bool operator<(const Atom& o) const;
  std::string str() const;
};

// A pre-constraint: one atom or a tensor of atoms, before the level
// annotation. Always non-empty.
struct PreConstraint {
  std::vector<Atom> atoms;
  bool operator==(const PreConstraint& o) const { return atoms == o.atoms; }
  std::string str() const;
};

struct ConstraintNode;

// Constraint grammar: 1 | C * C | ex x.(C) | [pre]@level.
// Immutable; cheap to copy.
class Constraint {
 public:
  enum class Kind { One, Tensor, Exists, Soft };

  static Constraint one();
  static Constraint tensor(Constraint lhs, Constraint rhs);
  static Constraint exists(std::string var, Constraint body);
  static Constraint soft(PreConstraint pre, Level level);

  Kind kind() const;
  Constraint lhs() const;
  Constraint rhs() const;
  const std::string& var() const;
  Constraint body() const;
  const PreConstraint& pre() const;
  const Level& level() const;

  bool operator==(const Constraint& o) const;
  std::string str() const;

 private:
  explicit Constraint(std::shared_ptr<const ConstraintNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ConstraintNode> node_;
};

class Process;
struct ProcessBranch;

// Process grammar: tell(c) | sum of ask(c_i).P_i | P || Q | new x in P | p(ts).
class Process {
 public:
  enum class Kind { Tell, Sum, Par, Local, Call };
  using Branch = ProcessBranch;

  static Process tell(Constraint c);
  static Process sum(std::vector<ProcessBranch> branches);  // non-empty
  static Process par(Process lhs, Process rhs);
  static Process local(std::string var, Process body);
  static Process call(std::string name, std::vector<Term> args);

  Kind kind() const;
  const Constraint& told() const;
  const std::vector<ProcessBranch>& branches() const;
  Process lhs() const;
  Process rhs() const;
  const std::string& var() const;
  Process body() const;
  const std::string& callee() const;
  const std::vector<Term>& call_args() const;

  bool operator==(const Process& o) const;
  std::string str() const;

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ProcessBranch {
  Constraint guard;
  Process body;
};

struct Definition {
  std::string name;
  std::vector<std::string> params;  // pairwise distinct; fv(body) within them
  Process body = Process::tell(Constraint::one());
};

// Non-logical axiom: forall vars. premise -o conclusion, both sides
// quantifier-free constraints.
struct Axiom {
  std::vector<std::string> vars;
  Constraint premise = Constraint::one();
  Constraint conclusion = Constraint::one();
  std::string str() const;
};

using Subst = std::map<std::string, Term>;

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Atom& a);
std::set<std::string> free_vars(const Constraint& c);
std::set<std::string> free_vars(const Process& p);

Term substitute(const Term& t, const Subst& map);
Atom substitute(const Atom& a, const Subst& map);
PreConstraint substitute(const PreConstraint& pc, const Subst& map);
Constraint substitute(const Constraint& c, const Subst& map, NameSource& fresh);
Process substitute(const Process& p, const Subst& map, NameSource& fresh);

// Prenex-tensor normal form: c == ex xs. ([pc_1]@a_1 * ... * [pc_n]@a_n),
// with every binder renamed to a globally fresh name.
struct NormalForm {
  std::vector<std::string> new_vars;
  std::vector<std::pair<PreConstraint, Level>> items;
};
NormalForm normalize(const Constraint& c, NameSource& fresh);

// Rebuilds a constraint from a normal form (existential closure of the
// tensor chain); used by tests and by the store-to-goal translation.
Constraint denormalize(const NormalForm& nf);

}  // namespace sccp
