#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sccp/ast.hpp"

namespace sccp {

// Promotion discipline: SELL bounds a promoted level by the glb of the
// context levels, SELLS by their semiring product. They coincide exactly on
// idempotent semirings.
enum class Mode { Sell, Sells };

Mode mode_named(std::string_view name);
const char* mode_name(Mode m);

// Equality classes induced by told eq-atoms. Representatives are
// size-minimal terms (then constants before functions before variables), so
// canonical descent always terminates.
class EqClasses {
 public:
  void unite(const Term& a, const Term& b);
  Term canon(const Term& t) const;
  Atom canon(const Atom& a) const;
  bool same(const Term& a, const Term& b) const { return canon(a) == canon(b); }
  bool empty() const { return parent_.empty(); }

 private:
  Term find(const Term& t) const;
  std::map<Term, Term> parent_;
};

// One store item: a leveled pre-constraint bundle. Bundles stay whole — the
// bundle is a single formula at a promotion, so it pays its level once no
// matter how many of its atoms a goal uses.
struct StoreEntry {
  PreConstraint pre;
  Level level = Level::crisp(true);
  int id = 0;
};

// The soft constraint store of a configuration: entries only ever grow.
class Store {
 public:
  const std::vector<StoreEntry>& entries() const { return entries_; }
  const std::set<std::string>& hidden() const { return hidden_; }
  const EqClasses& eq() const { return eq_; }
  int next_id() const { return next_id_; }

  // R_TELL: normalizes c, moves its binders into the hidden set, appends one
  // entry per normal-form item, and folds eq-atoms into the classes.
  Store add(const Constraint& c, const Semiring& s, NameSource& fresh) const;

  // The store printed back as a constraint: ex hidden. (tensor of items).
  Constraint as_constraint() const;

  std::string canonical_str() const;

 private:
  std::vector<StoreEntry> entries_;
  std::set<std::string> hidden_;
  EqClasses eq_;
  int next_id_ = 0;
};

// Saturation output: base entries plus axiom-derived virtual entries, all
// with eq-canonical atoms. Every entry carries a set of supports: ways to
// account for it at a promotion. A base entry supports itself. A derived
// entry is accountable either as the conclusion formula at its declared
// level (the sequent applies the axiom below the promotion) or through the
// entries that proved its premise (the axiom fires above the promotion), so
// it records {own id} plus the premise covers.
struct TableEntry {
  PreConstraint pre;  // canonical
  Level level = Level::crisp(true);
  int id = 0;
  bool base = true;
  std::vector<std::vector<int>> supports;  // each a set of entry ids
  int axiom = -1;
};

struct DerivedAtomTable {
  std::vector<TableEntry> entries;
  std::vector<Term> universe;  // canonical subterms, instantiation candidates
};

// Forward-chains the axioms for at most `bound` rounds. An axiom instance
// fires when every premise item has a support cover satisfying the mode
// discipline; each conclusion item then joins the table at its declared
// level. extra_terms widens the instantiation universe (goal subterms).
DerivedAtomTable saturate(const Store& st, const std::vector<Axiom>& axioms, int bound,
                          const Semiring& s, Mode mode,
                          const std::vector<Term>& extra_terms = {});

struct ItemTraceEntry {
  std::string atoms;
  std::vector<int> supports;
  std::string bound;
  std::string level;
  bool verdict = false;
};

struct EntailTrace {
  std::string goal;
  std::map<std::string, std::string> instantiation;
  std::vector<ItemTraceEntry> items;
  bool verdict = false;
};

// d |- c: normalizes the goal, searches an instantiation of its binders over
// the table universe and, per soft item, a support cover whose fold (glb in
// SELL, product in SELLS) sits above the item level. Distinct entries count
// once per item even when they support several of its atoms.
bool entails(const Store& st, const std::vector<Axiom>& axioms, const Constraint& goal,
             Mode mode, const Semiring& s, int bound = 3);
EntailTrace entails_traced(const Store& st, const std::vector<Axiom>& axioms,
                           const Constraint& goal, Mode mode, const Semiring& s, int bound = 3);

// Largest a with entails [pc]@a, or bottom when no cover exists.
Level best_level(const Store& st, const std::vector<Axiom>& axioms, const PreConstraint& pc,
                 Mode mode, const Semiring& s, int bound = 3);

}  // namespace sccp
