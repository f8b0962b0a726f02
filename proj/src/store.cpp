#include "sccp/store.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sccp {

Mode mode_named(std::string_view name) {
  if (name == "sell") return Mode::Sell;
  if (name == "sells") return Mode::Sells;
  throw std::invalid_argument("unknown mode: " + std::string(name) + " (expected sell or sells)");
}

const char* mode_name(Mode m) { return m == Mode::Sell ? "sell" : "sells"; }

static std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const Term& a : t.args) n += term_size(a);
  return n;
}

// Representative preference: smaller term, then Const < Fun < Var, then the
// structural order. Size-minimal reps cannot contain a class member, so
// canonical descent strictly shrinks.
static bool rep_less(const Term& a, const Term& b) {
  std::size_t sa = term_size(a), sb = term_size(b);
  if (sa != sb) return sa < sb;
  auto rank = [](Term::Kind k) {
    switch (k) {
      case Term::Kind::Const: return 0;
      case Term::Kind::Fun: return 1;
      case Term::Kind::Var: return 2;
    }
    return 3;
  };
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
  return a < b;
}

Term EqClasses::find(const Term& t) const {
  Term cur = t;
  for (int fuel = 0; fuel < 1000; ++fuel) {
    auto it = parent_.find(cur);
    if (it == parent_.end() || it->second == cur) return cur;
    cur = it->second;
  }
  return cur;
}

void EqClasses::unite(const Term& a, const Term& b) {
  Term ra = find(a), rb = find(b);
  if (ra == rb) return;
  Term rep = rep_less(ra, rb) ? ra : rb;
  Term other = rep_less(ra, rb) ? rb : ra;
  parent_[other] = rep;
  if (!parent_.count(rep)) parent_[rep] = rep;
}

Term EqClasses::canon(const Term& t) const {
  Term cur = t;
  for (int fuel = 0; fuel < 64; ++fuel) {
    Term rep = find(cur);
    std::vector<Term> args;
    args.reserve(rep.args.size());
    for (const Term& a : rep.args) args.push_back(canon(a));
    Term out{rep.kind, rep.name, std::move(args)};
    if (out == cur) return out;
    cur = out;
  }
  return cur;
}

Atom EqClasses::canon(const Atom& a) const {
  std::vector<Term> args;
  args.reserve(a.args.size());
  for (const Term& t : a.args) args.push_back(canon(t));
  return Atom{a.pred, std::move(args)};
}

Store Store::add(const Constraint& c, const Semiring& s, NameSource& fresh) const {
  Store out = *this;
  NormalForm nf = normalize(c, fresh);
  for (const std::string& v : nf.new_vars) out.hidden_.insert(v);
  for (auto& [pre, level] : nf.items) {
    if (level.kind() != s.kind())
      throw std::invalid_argument("told level " + level.str() + " is not a " + s.name() + " value");
    for (const Atom& a : pre.atoms) {
      if (a.is_eq()) {
        if (!(level == s.top()))
          throw std::invalid_argument("eq atoms must carry the top level");
        out.eq_.unite(a.args[0], a.args[1]);
      }
    }
    out.entries_.push_back(StoreEntry{pre, level, out.next_id_++});
  }
  return out;
}

Constraint Store::as_constraint() const {
  NormalForm nf;
  nf.new_vars.assign(hidden_.begin(), hidden_.end());
  for (const StoreEntry& e : entries_) nf.items.emplace_back(e.pre, e.level);
  if (nf.items.empty()) return Constraint::one();
  return denormalize(nf);
}

std::string Store::canonical_str() const {
  std::vector<std::string> lines;
  for (const StoreEntry& e : entries_) {
    PreConstraint canon;
    for (const Atom& a : e.pre.atoms) canon.atoms.push_back(eq_.canon(a));
    std::sort(canon.atoms.begin(), canon.atoms.end());
    lines.push_back("[" + canon.str() + "]@" + e.level.str());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "; ";
  return out;
}

namespace {

void collect_subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const Term& a : t.args) collect_subterms(a, out);
}

void add_unique(std::vector<Term>& universe, const Term& t) {
  if (std::find(universe.begin(), universe.end(), t) == universe.end()) universe.push_back(t);
}

const TableEntry* entry_by_id(const std::vector<TableEntry>& entries, int id) {
  for (const TableEntry& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

Level fold_ids(const std::vector<int>& ids, const std::vector<TableEntry>& entries, Mode mode,
               const Semiring& s) {
  std::vector<Level> levels;
  levels.reserve(ids.size());
  for (int id : ids) levels.push_back(entry_by_id(entries, id)->level);
  return mode == Mode::Sell ? s.glb(levels) : s.fold_times(levels);
}

std::vector<int> union_sets(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int id : b)
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

// One way of accounting for an item at a promotion, with the fold it pays.
struct ItemCover {
  Level bound = Level::crisp(true);
  std::vector<int> entry_ids;  // sorted, distinct
};

constexpr std::size_t kMaxCoversPerItem = 12;

// All distinct support unions covering the item's atoms, best bound first.
// Each atom picks one support set of one covering entry; support sets merge
// with deduplication, which is exactly how a single banged occurrence serves
// several atoms at one promotion. eq-atoms over canon-equal terms need no
// support at all.
std::vector<ItemCover> item_covers(const std::vector<TableEntry>& entries,
                                   const PreConstraint& pc, Mode mode, const Semiring& s) {
  std::vector<std::vector<const std::vector<int>*>> options;
  for (const Atom& atom : pc.atoms) {
    if (atom.is_eq() && atom.args[0] == atom.args[1]) continue;  // already canonical
    std::vector<const std::vector<int>*> covering;
    for (const TableEntry& e : entries) {
      bool hits = false;
      for (const Atom& ea : e.pre.atoms)
        if (ea == atom) { hits = true; break; }
      if (!hits) continue;
      for (const std::vector<int>& sup : e.supports) covering.push_back(&sup);
    }
    if (covering.empty()) return {};
    options.push_back(std::move(covering));
  }
  std::vector<ItemCover> covers;
  if (options.empty()) {
    covers.push_back(ItemCover{s.top(), {}});
    return covers;
  }

  std::vector<std::vector<int>> seen;
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < options.size(); ++i) ids = union_sets(ids, *options[i][choice[i]]);
    if (std::find(seen.begin(), seen.end(), ids) == seen.end()) {
      seen.push_back(ids);
      covers.push_back(ItemCover{fold_ids(ids, entries, mode, s), ids});
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  std::sort(covers.begin(), covers.end(),
            [&](const ItemCover& a, const ItemCover& b) { return s.leq(b.bound, a.bound) && !(a.bound == b.bound); });
  if (covers.size() > kMaxCoversPerItem) covers.resize(kMaxCoversPerItem);
  return covers;
}

std::optional<ItemCover> best_item_cover(const std::vector<TableEntry>& entries,
                                         const PreConstraint& pc, Mode mode, const Semiring& s) {
  std::vector<ItemCover> covers = item_covers(entries, pc, mode, s);
  if (covers.empty()) return std::nullopt;
  return covers.front();
}

// One-way match of a premise atom pattern against a canonical table atom,
// extending theta.
bool match_term(const Term& pattern, const Term& ground, const std::set<std::string>& vars,
                Subst& theta) {
  if (pattern.kind == Term::Kind::Var && vars.count(pattern.name)) {
    auto it = theta.find(pattern.name);
    if (it != theta.end()) return it->second == ground;
    theta[pattern.name] = ground;
    return true;
  }
  if (pattern.kind != ground.kind || pattern.name != ground.name ||
      pattern.args.size() != ground.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_term(pattern.args[i], ground.args[i], vars, theta)) return false;
  return true;
}

bool match_atom(const Atom& pattern, const Atom& ground, const std::set<std::string>& vars,
                Subst& theta) {
  if (pattern.pred != ground.pred || pattern.args.size() != ground.args.size()) return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_term(pattern.args[i], ground.args[i], vars, theta)) return false;
  return true;
}

// All substitutions binding the axiom variables: premise atoms matched
// against table atoms, leftover (conclusion-only) variables drawn from the
// universe.
void enumerate_thetas(const std::vector<Atom>& premise_atoms, std::size_t idx,
                      const std::vector<Atom>& table_atoms, const std::set<std::string>& vars,
                      Subst& theta, const std::vector<Term>& universe,
                      const std::vector<std::string>& all_vars, std::vector<Subst>& out) {
  if (idx == premise_atoms.size()) {
    std::vector<std::string> unbound;
    for (const std::string& v : all_vars)
      if (!theta.count(v)) unbound.push_back(v);
    if (unbound.empty()) {
      out.push_back(theta);
      return;
    }
    std::vector<std::size_t> pick(unbound.size(), 0);
    if (universe.empty()) return;
    while (true) {
      Subst full = theta;
      for (std::size_t i = 0; i < unbound.size(); ++i) full[unbound[i]] = universe[pick[i]];
      out.push_back(std::move(full));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == universe.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
    return;
  }
  const Atom& pat = premise_atoms[idx];
  if (pat.is_eq()) {
    // defer eq premise atoms: bound later by the coverage check
    enumerate_thetas(premise_atoms, idx + 1, table_atoms, vars, theta, universe, all_vars, out);
    return;
  }
  for (const Atom& ta : table_atoms) {
    Subst extended = theta;
    if (match_atom(pat, ta, vars, extended))
      enumerate_thetas(premise_atoms, idx + 1, table_atoms, vars, extended, universe, all_vars, out);
  }
}

PreConstraint canon_pre(const PreConstraint& pre, const EqClasses& eq) {
  PreConstraint out;
  out.atoms.reserve(pre.atoms.size());
  for (const Atom& a : pre.atoms) out.atoms.push_back(eq.canon(a));
  return out;
}

}  // namespace

DerivedAtomTable saturate(const Store& st, const std::vector<Axiom>& axioms, int bound,
                          const Semiring& s, Mode mode, const std::vector<Term>& extra_terms) {
  DerivedAtomTable table;
  const EqClasses& eq = st.eq();
  for (const StoreEntry& e : st.entries())
    table.entries.push_back(TableEntry{canon_pre(e.pre, eq), e.level, e.id, true, {{e.id}}, -1});

  auto rebuild_universe = [&]() {
    table.universe.clear();
    std::vector<Term> subs;
    for (const TableEntry& e : table.entries)
      for (const Atom& a : e.pre.atoms)
        for (const Term& t : a.args) collect_subterms(t, subs);
    for (const Term& t : extra_terms) collect_subterms(eq.canon(t), subs);
    for (const Term& t : subs) add_unique(table.universe, eq.canon(t));
  };
  rebuild_universe();

  int synthetic_id = -2;  // derived entries get negative ids below the axiom tag
  NameSource scratch;
  for (int round = 0; round < bound; ++round) {
    bool added = false;
    for (std::size_t ax = 0; ax < axioms.size(); ++ax) {
      NormalForm prem = normalize(axioms[ax].premise, scratch);
      NormalForm concl = normalize(axioms[ax].conclusion, scratch);
      if (!prem.new_vars.empty() || !concl.new_vars.empty())
        throw std::invalid_argument("axiom sides must be quantifier-free");

      std::set<std::string> vars(axioms[ax].vars.begin(), axioms[ax].vars.end());
      std::vector<Atom> premise_atoms;
      for (const auto& [pc, lvl] : prem.items) {
        (void)lvl;
        for (const Atom& a : pc.atoms) premise_atoms.push_back(a);
      }
      std::vector<Atom> table_atoms;
      for (const TableEntry& e : table.entries)
        for (const Atom& a : e.pre.atoms) table_atoms.push_back(a);

      std::vector<Subst> thetas;
      Subst empty;
      enumerate_thetas(premise_atoms, 0, table_atoms, vars, empty, table.universe,
                       axioms[ax].vars, thetas);

      for (const Subst& theta : thetas) {
        // every premise item needs at least one passing cover; the passing
        // covers combine into the support sets of the conclusions
        bool all_items_ok = true;
        std::vector<std::vector<int>> combos{{}};
        for (const auto& [pc, lvl] : prem.items) {
          PreConstraint inst = canon_pre(substitute(pc, theta), eq);
          std::vector<ItemCover> covers = item_covers(table.entries, inst, mode, s);
          std::vector<ItemCover> passing;
          for (const ItemCover& c : covers)
            if (s.leq(lvl, c.bound)) passing.push_back(c);
          if (passing.empty()) {
            all_items_ok = false;
            break;
          }
          std::vector<std::vector<int>> next;
          for (const auto& base : combos)
            for (const ItemCover& c : passing) {
              std::vector<int> u = union_sets(base, c.entry_ids);
              if (std::find(next.begin(), next.end(), u) == next.end()) next.push_back(u);
              if (next.size() >= kMaxCoversPerItem) break;
            }
          combos = std::move(next);
        }
        if (!all_items_ok) continue;
        for (const auto& [pc, lvl] : concl.items) {
          PreConstraint inst = canon_pre(substitute(pc, theta), eq);
          TableEntry* existing = nullptr;
          for (TableEntry& e : table.entries)
            if (e.pre == inst && e.level == lvl && e.axiom == static_cast<int>(ax)) {
              existing = &e;
              break;
            }
          if (existing) {
            for (const auto& u : combos)
              if (std::find(existing->supports.begin(), existing->supports.end(), u) ==
                      existing->supports.end() &&
                  existing->supports.size() < 2 * kMaxCoversPerItem) {
                existing->supports.push_back(u);
                added = true;
              }
            continue;
          }
          TableEntry d;
          d.pre = inst;
          d.level = lvl;
          d.id = synthetic_id--;
          d.base = false;
          d.supports.push_back({d.id});
          for (const auto& u : combos)
            if (std::find(d.supports.begin(), d.supports.end(), u) == d.supports.end())
              d.supports.push_back(u);
          d.axiom = static_cast<int>(ax);
          table.entries.push_back(std::move(d));
          added = true;
        }
      }
    }
    if (!added) break;
    rebuild_universe();
  }
  return table;
}

namespace {

// Subterms of the normal-form items that do not mention the goal's own
// binders; these widen the instantiation universe.
std::vector<Term> goal_subterms(const NormalForm& nf) {
  std::set<std::string> bound(nf.new_vars.begin(), nf.new_vars.end());
  std::vector<Term> subs;
  for (const auto& [pc, lvl] : nf.items) {
    (void)lvl;
    for (const Atom& a : pc.atoms)
      for (const Term& t : a.args) collect_subterms(t, subs);
  }
  std::vector<Term> out;
  for (const Term& t : subs) {
    bool mentions_bound = false;
    for (const std::string& v : free_vars(t))
      if (bound.count(v)) { mentions_bound = true; break; }
    if (!mentions_bound) add_unique(out, t);
  }
  return out;
}

}  // namespace

EntailTrace entails_traced(const Store& st, const std::vector<Axiom>& axioms,
                           const Constraint& goal, Mode mode, const Semiring& s, int bound) {
  EntailTrace trace;
  trace.goal = goal.str();

  NameSource local;
  local.next = 900000;  // goal binders; never collide with store hiding
  NormalForm nf = normalize(goal, local);
  if (nf.items.empty()) {
    trace.verdict = true;
    return trace;
  }

  DerivedAtomTable table = saturate(st, axioms, bound, s, mode, goal_subterms(nf));

  std::vector<Term> candidates = table.universe;
  add_unique(candidates, Term::constant("_k"));  // mirrors the prover's fresh witness

  const EqClasses& eq = st.eq();
  std::vector<std::size_t> pick(nf.new_vars.size(), 0);
  EntailTrace best_attempt = trace;
  int best_satisfied = -1;
  while (true) {
    Subst theta;
    for (std::size_t i = 0; i < nf.new_vars.size(); ++i) theta[nf.new_vars[i]] = candidates[pick[i]];

    EntailTrace attempt = trace;
    for (const auto& [v, t] : theta) attempt.instantiation[v] = t.str();
    int satisfied = 0;
    bool all_ok = true;
    for (const auto& [pc, lvl] : nf.items) {
      PreConstraint inst = canon_pre(substitute(pc, theta), eq);
      ItemTraceEntry it;
      it.atoms = inst.str();
      it.level = lvl.str();
      auto cover = best_item_cover(table.entries, inst, mode, s);
      if (cover) {
        it.bound = cover->bound.str();
        it.supports = cover->entry_ids;
        it.verdict = s.leq(lvl, cover->bound);
      } else {
        it.bound = "(no cover)";
        it.verdict = false;
      }
      satisfied += it.verdict ? 1 : 0;
      all_ok = all_ok && it.verdict;
      attempt.items.push_back(std::move(it));
    }
    if (all_ok) {
      attempt.verdict = true;
      return attempt;
    }
    if (satisfied > best_satisfied) {
      best_satisfied = satisfied;
      best_attempt = attempt;
    }
    if (nf.new_vars.empty()) break;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  best_attempt.verdict = false;
  return best_attempt;
}

bool entails(const Store& st, const std::vector<Axiom>& axioms, const Constraint& goal,
             Mode mode, const Semiring& s, int bound) {
  return entails_traced(st, axioms, goal, mode, s, bound).verdict;
}

Level best_level(const Store& st, const std::vector<Axiom>& axioms, const PreConstraint& pc,
                 Mode mode, const Semiring& s, int bound) {
  std::vector<Term> extra;
  for (const Atom& a : pc.atoms)
    for (const Term& t : a.args) collect_subterms(t, extra);
  DerivedAtomTable table = saturate(st, axioms, bound, s, mode, extra);
  PreConstraint inst = canon_pre(pc, st.eq());
  auto cover = best_item_cover(table.entries, inst, mode, s);
  return cover ? cover->bound : s.bottom();
}

}  // namespace sccp
