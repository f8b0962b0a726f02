#include "sccp/prover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sccp {

std::string SubIndex::str() const {
  switch (kind) {
    case Kind::Level: return level.str();
    case Kind::ProcMark: return "p";
    case Kind::CallMark: return "d";
    case Kind::DefMark: return "u";
    case Kind::BotC: return "botc";
    case Kind::TopC: return "topc";
  }
  return "?";
}

struct FormulaNode {
  Formula::Kind kind;
  Atom atom;
  std::shared_ptr<const FormulaNode> lhs;  // Tensor/Lolli lhs, quantifier/bang body
  std::shared_ptr<const FormulaNode> rhs;
  std::vector<Formula> parts;  // With
  std::string var;
  SubIndex idx;
  explicit FormulaNode(Formula::Kind k) : kind(k) {}
};

Formula Formula::atomic(Atom a) {
  auto n = std::make_shared<FormulaNode>(Kind::Atomic);
  n->atom = std::move(a);
  return Formula(std::move(n));
}
Formula Formula::one() {
  static const Formula f(std::make_shared<const FormulaNode>(Kind::One));
  return f;
}
Formula Formula::top() {
  static const Formula f(std::make_shared<const FormulaNode>(Kind::Top));
  return f;
}
Formula Formula::tensor(Formula lhs, Formula rhs) {
  auto n = std::make_shared<FormulaNode>(Kind::Tensor);
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}
Formula Formula::with(std::vector<Formula> parts) {
  if (parts.empty()) throw std::invalid_argument("empty with");
  auto n = std::make_shared<FormulaNode>(Kind::With);
  n->parts = std::move(parts);
  return Formula(std::move(n));
}
Formula Formula::lolli(Formula lhs, Formula rhs) {
  auto n = std::make_shared<FormulaNode>(Kind::Lolli);
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}
Formula Formula::exists(std::string var, Formula body) {
  auto n = std::make_shared<FormulaNode>(Kind::Exists);
  n->lhs = body.node_;
  n->var = std::move(var);
  return Formula(std::move(n));
}
Formula Formula::forall(std::string var, Formula body) {
  auto n = std::make_shared<FormulaNode>(Kind::Forall);
  n->lhs = body.node_;
  n->var = std::move(var);
  return Formula(std::move(n));
}
Formula Formula::bang(SubIndex idx, Formula body) {
  auto n = std::make_shared<FormulaNode>(Kind::Bang);
  n->lhs = body.node_;
  n->idx = std::move(idx);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Atom& Formula::atom() const { return node_->atom; }
Formula Formula::lhs() const { return Formula(node_->lhs); }
Formula Formula::rhs() const { return Formula(node_->rhs); }
const std::vector<Formula>& Formula::parts() const { return node_->parts; }
const std::string& Formula::var() const { return node_->var; }
Formula Formula::body() const { return Formula(node_->lhs); }
const SubIndex& Formula::index() const { return node_->idx; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Atomic: return atom() == o.atom();
    case Kind::One:
    case Kind::Top: return true;
    case Kind::Tensor:
    case Kind::Lolli: return lhs() == o.lhs() && rhs() == o.rhs();
    case Kind::With: {
      if (parts().size() != o.parts().size()) return false;
      for (std::size_t i = 0; i < parts().size(); ++i)
        if (!(parts()[i] == o.parts()[i])) return false;
      return true;
    }
    case Kind::Exists:
    case Kind::Forall: return var() == o.var() && body() == o.body();
    case Kind::Bang: return index() == o.index() && body() == o.body();
  }
  return false;
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::Atomic: return atom().str();
    case Kind::One: return "1";
    case Kind::Top: return "top";
    case Kind::Tensor: return "(" + lhs().str() + " * " + rhs().str() + ")";
    case Kind::Lolli: return "(" + lhs().str() + " -o " + rhs().str() + ")";
    case Kind::With: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) out += " & ";
        out += parts()[i].str();
      }
      return out + ")";
    }
    case Kind::Exists: return "(ex " + var() + ". " + body().str() + ")";
    case Kind::Forall: return "(all " + var() + ". " + body().str() + ")";
    case Kind::Bang: return "!{" + index().str() + "} " + body().str();
  }
  return "?";
}

std::set<std::string> free_vars(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: return free_vars(f.atom());
    case Formula::Kind::One:
    case Formula::Kind::Top: return {};
    case Formula::Kind::Tensor:
    case Formula::Kind::Lolli: {
      auto out = free_vars(f.lhs());
      out.merge(free_vars(f.rhs()));
      return out;
    }
    case Formula::Kind::With: {
      std::set<std::string> out;
      for (const Formula& p : f.parts()) out.merge(free_vars(p));
      return out;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      auto out = free_vars(f.body());
      out.erase(f.var());
      return out;
    }
    case Formula::Kind::Bang: return free_vars(f.body());
  }
  return {};
}

Formula substitute(const Formula& f, const Subst& map, NameSource& fresh) {
  if (map.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::Atomic: return Formula::atomic(substitute(f.atom(), map));
    case Formula::Kind::One:
    case Formula::Kind::Top: return f;
    case Formula::Kind::Tensor:
      return Formula::tensor(substitute(f.lhs(), map, fresh), substitute(f.rhs(), map, fresh));
    case Formula::Kind::Lolli:
      return Formula::lolli(substitute(f.lhs(), map, fresh), substitute(f.rhs(), map, fresh));
    case Formula::Kind::With: {
      std::vector<Formula> parts;
      parts.reserve(f.parts().size());
      for (const Formula& p : f.parts()) parts.push_back(substitute(p, map, fresh));
      return Formula::with(std::move(parts));
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      Subst inner = map;
      inner.erase(f.var());
      std::string var = f.var();
      bool capture = false;
      for (const auto& [from, to] : inner) {
        (void)from;
        if (free_vars(to).count(var)) { capture = true; break; }
      }
      if (capture) {
        var = fresh.fresh();
        inner[f.var()] = Term::var(var);
      }
      Formula body = substitute(f.body(), inner, fresh);
      return f.kind() == Formula::Kind::Exists ? Formula::exists(var, std::move(body))
                                               : Formula::forall(var, std::move(body));
    }
    case Formula::Kind::Bang:
      return Formula::bang(f.index(), substitute(f.body(), map, fresh));
  }
  return f;
}

bool Signature::preceq(const SubIndex& a, const SubIndex& b) const {
  if (a.kind == SubIndex::Kind::BotC || b.kind == SubIndex::Kind::TopC) return true;
  if (a.kind == SubIndex::Kind::TopC) return b.kind == SubIndex::Kind::TopC;
  if (b.kind == SubIndex::Kind::BotC) return a.kind == SubIndex::Kind::BotC;
  if (a.kind == SubIndex::Kind::Level && b.kind == SubIndex::Kind::Level)
    return s_.leq(a.level, b.level);
  return a.kind == b.kind;  // p, d, u only relate to themselves
}

bool Signature::unbounded(const SubIndex& a) const {
  switch (a.kind) {
    case SubIndex::Kind::Level:
    case SubIndex::Kind::DefMark:
    case SubIndex::Kind::TopC: return true;
    default: return false;
  }
}

SubIndex Signature::completed_times(const SubIndex& a, const SubIndex& b) const {
  if (a.kind == SubIndex::Kind::TopC) return b;
  if (b.kind == SubIndex::Kind::TopC) return a;
  if (a.kind == SubIndex::Kind::BotC || b.kind == SubIndex::Kind::BotC) return SubIndex::bot_c();
  if (a.kind != SubIndex::Kind::Level || b.kind != SubIndex::Kind::Level)
    return SubIndex::bot_c();  // p, d, u annihilate any product
  return SubIndex::lvl(s_.times(a.level, b.level));
}

bool Signature::promotion_ok(const std::vector<SubIndex>& ctx, const SubIndex& target,
                             Mode mode) const {
  if (mode == Mode::Sell) {
    for (const SubIndex& i : ctx)
      if (!preceq(target, i)) return false;
    return true;
  }
  SubIndex prod = SubIndex::top_c();
  for (const SubIndex& i : ctx) prod = completed_times(prod, i);
  return preceq(target, prod);
}

bool check_promotion(const std::vector<SubIndex>& ctx, const SubIndex& target, Mode mode,
                     const Signature& sig) {
  return sig.promotion_ok(ctx, target, mode);
}

std::string Sequent::str() const {
  std::string out;
  for (std::size_t i = 0; i < context.size(); ++i) {
    if (i) out += ", ";
    out += context[i].str();
  }
  return out + " |- " + goal.str();
}

// ---------------------------------------------------------------------------
// Backward proof search
// ---------------------------------------------------------------------------

namespace {

struct CtxItem {
  Formula f;
  int copies;
};

struct MemoEntry {
  bool proved = false;
  ProofNode proof;          // valid when proved
  bool definitive = false;  // failure established without hitting any limit
  int failed_depth = -1;    // truncated failure was at this depth
};

class Searcher {
 public:
  Searcher(const Signature& sig, Mode mode, const SearchLimits& limits)
      : sig_(sig), mode_(mode), limits_(limits) {
    rename_.next = 800000;  // binder renames during substitution
  }

  std::optional<ProofNode> run(const Sequent& seq) {
    std::vector<CtxItem> ctx;
    ctx.reserve(seq.context.size());
    for (const Formula& f : seq.context) ctx.push_back({f, limits_.copy_budget});
    return search(ctx, seq.goal, limits_.depth);
  }

  bool truncated() const { return truncated_; }
  long nodes() const { return nodes_; }

 private:
  const Signature& sig_;
  Mode mode_;
  SearchLimits limits_;
  NameSource rename_;
  int eigen_counter_ = 0;
  long nodes_ = 0;
  bool truncated_ = false;
  std::map<std::string, MemoEntry> memo_;

  bool weakenable(const Formula& f) const {
    return f.kind() == Formula::Kind::Bang && sig_.unbounded(f.index());
  }

  Sequent snapshot(const std::vector<CtxItem>& ctx, const Formula& goal) const {
    Sequent s;
    s.goal = goal;
    s.context.reserve(ctx.size());
    for (const CtxItem& it : ctx) s.context.push_back(it.f);
    return s;
  }

  std::string key_of(const std::vector<CtxItem>& ctx, const Formula& goal, int depth) const {
    std::vector<std::string> parts;
    parts.reserve(ctx.size());
    for (const CtxItem& it : ctx) parts.push_back(it.f.str() + "#" + std::to_string(it.copies));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + ";";
    key += "|-" + goal.str();
    (void)depth;
    return key;
  }

  std::vector<Term> candidate_terms(const std::vector<CtxItem>& ctx, const Formula& goal) {
    std::set<std::string> fv;
    for (const CtxItem& it : ctx) fv.merge(free_vars(it.f));
    fv.merge(free_vars(goal));
    std::vector<Term> out;
    auto add_terms_of = [&](const Formula& f) {
      collect_atom_terms(f, out);
    };
    for (const CtxItem& it : ctx) add_terms_of(it.f);
    add_terms_of(goal);
    std::vector<Term> filtered;
    for (const Term& t : out) {
      bool ok = true;
      for (const std::string& v : free_vars(t))
        if (!fv.count(v)) { ok = false; break; }
      if (ok && std::find(filtered.begin(), filtered.end(), t) == filtered.end())
        filtered.push_back(t);
    }
    Term w = Term::constant("_w");
    if (std::find(filtered.begin(), filtered.end(), w) == filtered.end()) filtered.push_back(w);
    return filtered;
  }

  static void collect_atom_terms(const Formula& f, std::vector<Term>& out) {
    switch (f.kind()) {
      case Formula::Kind::Atomic:
        for (const Term& t : f.atom().args) collect_subterms_rec(t, out);
        return;
      case Formula::Kind::One:
      case Formula::Kind::Top: return;
      case Formula::Kind::Tensor:
      case Formula::Kind::Lolli:
        collect_atom_terms(f.lhs(), out);
        collect_atom_terms(f.rhs(), out);
        return;
      case Formula::Kind::With:
        for (const Formula& p : f.parts()) collect_atom_terms(p, out);
        return;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
      case Formula::Kind::Bang:
        collect_atom_terms(f.body(), out);
        return;
    }
  }

  static void collect_subterms_rec(const Term& t, std::vector<Term>& out) {
    out.push_back(t);
    for (const Term& a : t.args) collect_subterms_rec(a, out);
  }

  static bool mentions_pred(const Formula& f, const std::string& pred) {
    switch (f.kind()) {
      case Formula::Kind::Atomic: return f.atom().pred == pred;
      case Formula::Kind::One:
      case Formula::Kind::Top: return false;
      case Formula::Kind::Tensor:
      case Formula::Kind::Lolli:
        return mentions_pred(f.lhs(), pred) || mentions_pred(f.rhs(), pred);
      case Formula::Kind::With:
        for (const Formula& p : f.parts())
          if (mentions_pred(p, pred)) return true;
        return false;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
      case Formula::Kind::Bang: return mentions_pred(f.body(), pred);
    }
    return false;
  }

  // Predicates a proof of this goal must introduce at init leaves; nullopt
  // when the goal has connectives that can discharge branches another way.
  static std::optional<std::set<std::string>> required_preds(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atomic: return std::set<std::string>{f.atom().pred};
      case Formula::Kind::Tensor: {
        auto l = required_preds(f.lhs());
        auto r = required_preds(f.rhs());
        if (!l || !r) return std::nullopt;
        l->merge(*r);
        return l;
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Bang: return required_preds(f.body());
      default: return std::nullopt;
    }
  }

  std::optional<ProofNode> search(std::vector<CtxItem> ctx, Formula goal, int depth) {
    if (++nodes_ > limits_.max_nodes) {
      truncated_ = true;
      return std::nullopt;
    }

    // subformula property: init leaves are the only source of atoms, so a
    // goal needing a predicate the context never mentions is a dead end
    if (auto needed = required_preds(goal)) {
      for (const std::string& pred : *needed) {
        bool present = false;
        for (const CtxItem& it : ctx)
          if (mentions_pred(it.f, pred)) { present = true; break; }
        if (!present) return std::nullopt;
      }
    }

    // ---- invertible rules, free of depth cost ----
    if (goal.kind() == Formula::Kind::Top)
      return ProofNode{"top_R", snapshot(ctx, goal), {}, {}, {}, "", -1};

    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (ctx[i].f.kind() == Formula::Kind::One) {
        auto rest = ctx;
        rest.erase(rest.begin() + i);
        auto sub = search(std::move(rest), goal, depth);
        if (!sub) return std::nullopt;
        return ProofNode{"one_L", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, "", -1};
      }
      if (ctx[i].f.kind() == Formula::Kind::Tensor) {
        auto rest = ctx;
        Formula l = ctx[i].f.lhs(), r = ctx[i].f.rhs();
        rest.erase(rest.begin() + i);
        rest.push_back({l, limits_.copy_budget});
        rest.push_back({r, limits_.copy_budget});
        auto sub = search(std::move(rest), goal, depth);
        if (!sub) return std::nullopt;
        return ProofNode{"tensor_L", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, "", -1};
      }
      if (ctx[i].f.kind() == Formula::Kind::Exists) {
        std::string eigen = "_e" + std::to_string(eigen_counter_++);
        auto rest = ctx;
        Formula body = substitute(ctx[i].f.body(), {{ctx[i].f.var(), Term::var(eigen)}}, rename_);
        rest[i] = {body, limits_.copy_budget};
        auto sub = search(std::move(rest), goal, depth);
        if (!sub) return std::nullopt;
        return ProofNode{"exists_L", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, eigen, -1};
      }
    }

    if (goal.kind() == Formula::Kind::Lolli) {
      auto extended = ctx;
      extended.push_back({goal.lhs(), limits_.copy_budget});
      auto sub = search(std::move(extended), goal.rhs(), depth);
      if (!sub) return std::nullopt;
      return ProofNode{"lolli_R", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, "", -1};
    }
    if (goal.kind() == Formula::Kind::With) {
      std::vector<ProofNode> premises;
      for (const Formula& part : goal.parts()) {
        auto sub = search(ctx, part, depth);
        if (!sub) return std::nullopt;
        premises.push_back(std::move(*sub));
      }
      return ProofNode{"with_R", snapshot(ctx, goal), std::move(premises), {}, {}, "", -1};
    }
    if (goal.kind() == Formula::Kind::Forall) {
      std::string eigen = "_e" + std::to_string(eigen_counter_++);
      Formula body = substitute(goal.body(), {{goal.var(), Term::var(eigen)}}, rename_);
      auto sub = search(ctx, body, depth);
      if (!sub) return std::nullopt;
      return ProofNode{"forall_R", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, eigen, -1};
    }

    // ---- leaves ----
    if (goal.kind() == Formula::Kind::One) {
      bool all_weak = true;
      for (const CtxItem& it : ctx)
        if (!weakenable(it.f)) { all_weak = false; break; }
      if (all_weak) return ProofNode{"one_R", snapshot(ctx, goal), {}, {}, {}, "", -1};
    }
    if (goal.kind() == Formula::Kind::Atomic) {
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (ctx[i].f.kind() != Formula::Kind::Atomic || !(ctx[i].f.atom() == goal.atom())) continue;
        bool rest_weak = true;
        for (std::size_t j = 0; j < ctx.size(); ++j)
          if (j != i && !weakenable(ctx[j].f)) { rest_weak = false; break; }
        if (rest_weak) return ProofNode{"init", snapshot(ctx, goal), {}, {}, {}, "", -1};
      }
      // copying an unbounded banged atom pays off only right before init, so
      // the two fuse into one leaf; the copy rule skips atom bodies
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        const Formula& f = ctx[i].f;
        if (f.kind() != Formula::Kind::Bang || !sig_.unbounded(f.index())) continue;
        if (f.body().kind() != Formula::Kind::Atomic || !(f.body().atom() == goal.atom())) continue;
        bool rest_weak = true;
        for (std::size_t j = 0; j < ctx.size(); ++j)
          if (j != i && !weakenable(ctx[j].f)) { rest_weak = false; break; }
        if (!rest_weak) continue;
        Sequent inner = snapshot(ctx, goal);
        inner.context.push_back(f.body());
        ProofNode leaf{"init", inner, {}, {}, {}, "", -1};
        return ProofNode{"copy", snapshot(ctx, goal), {std::move(leaf)}, {}, {}, "", -1};
      }
      // subformula property: init is the only way to introduce an atom, and
      // left rules never invent predicates, so a goal predicate absent from
      // the context is a definitive dead end
      bool pred_present = false;
      for (const CtxItem& it : ctx)
        if (mentions_pred(it.f, goal.atom().pred)) { pred_present = true; break; }
      if (!pred_present) return std::nullopt;
    }

    // ---- memo ----
    std::string key = key_of(ctx, goal, depth);
    auto mit = memo_.find(key);
    if (mit != memo_.end()) {
      if (mit->second.proved) return mit->second.proof;
      if (mit->second.definitive) return std::nullopt;
      if (mit->second.failed_depth >= depth) {
        truncated_ = true;
        return std::nullopt;
      }
    }

    bool saved_trunc = truncated_;
    truncated_ = false;
    std::optional<ProofNode> found = try_choices(ctx, goal, depth);
    bool subtree_trunc = truncated_;

    if (found) {
      truncated_ = saved_trunc;
      MemoEntry e;
      e.proved = true;
      e.proof = *found;
      memo_[key] = std::move(e);
      return found;
    }
    truncated_ = saved_trunc || subtree_trunc;
    MemoEntry e;
    if (!subtree_trunc) {
      e.definitive = true;
    } else {
      e.failed_depth = depth;
      auto old = memo_.find(key);
      if (old != memo_.end() && !old->second.proved && old->second.failed_depth > e.failed_depth)
        e.failed_depth = old->second.failed_depth;
    }
    memo_[key] = std::move(e);
    return std::nullopt;
  }

  std::optional<ProofNode> try_choices(const std::vector<CtxItem>& ctx, const Formula& goal,
                                       int depth) {
    if (depth <= 0) {
      truncated_ = true;
      return std::nullopt;
    }

    // promotion
    if (goal.kind() == Formula::Kind::Bang) {
      if (auto r = try_promotion(ctx, goal, depth)) return r;
    }

    // exists_R
    if (goal.kind() == Formula::Kind::Exists) {
      for (const Term& t : candidate_terms(ctx, goal)) {
        Formula inst = substitute(goal.body(), {{goal.var(), t}}, rename_);
        auto sub = search(ctx, inst, depth - 1);
        if (sub)
          return ProofNode{"exists_R", snapshot(ctx, goal), {std::move(*sub)}, {}, t, "", -1};
      }
    }

    // tensor_R
    if (goal.kind() == Formula::Kind::Tensor) {
      if (auto r = try_split(ctx, goal, depth)) return r;
    }

    // left choice rules
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& f = ctx[i].f;
      if (f.kind() == Formula::Kind::Bang && !sig_.unbounded(f.index())) {
        auto rest = ctx;
        rest[i] = {f.body(), limits_.copy_budget};
        auto sub = search(std::move(rest), goal, depth - 1);
        if (sub) return ProofNode{"bang_L", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, "", -1};
      }
      if (f.kind() == Formula::Kind::With) {
        for (std::size_t k = 0; k < f.parts().size(); ++k) {
          auto rest = ctx;
          rest[i] = {f.parts()[k], limits_.copy_budget};
          auto sub = search(std::move(rest), goal, depth - 1);
          if (sub)
            return ProofNode{"with_L", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, "",
                             static_cast<int>(k)};
        }
      }
      if (f.kind() == Formula::Kind::Lolli) {
        if (auto r = try_lolli(ctx, i, goal, depth)) return r;
      }
      if (f.kind() == Formula::Kind::Forall) {
        for (const Term& t : candidate_terms(ctx, goal)) {
          auto rest = ctx;
          rest[i] = {substitute(f.body(), {{f.var(), t}}, rename_), limits_.copy_budget};
          auto sub = search(std::move(rest), goal, depth - 1);
          if (sub)
            return ProofNode{"forall_L", snapshot(ctx, goal), {std::move(*sub)}, {}, t, "", -1};
        }
      }
    }

    // copy (contraction + dereliction on an unbounded bang); the per-formula
    // budget is part of the bounded calculus, not a truncation signal.
    // Atom bodies are handled by the fused copy+init leaf above.
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& f = ctx[i].f;
      if (f.kind() != Formula::Kind::Bang || !sig_.unbounded(f.index())) continue;
      if (f.body().kind() == Formula::Kind::Atomic) continue;
      if (ctx[i].copies <= 0) continue;
      auto rest = ctx;
      rest[i].copies -= 1;
      rest.push_back({f.body(), limits_.copy_budget});
      auto sub = search(std::move(rest), goal, depth - 1);
      if (sub) return ProofNode{"copy", snapshot(ctx, goal), {std::move(*sub)}, {}, {}, "", -1};
    }

    return std::nullopt;
  }

  std::optional<ProofNode> try_promotion(const std::vector<CtxItem>& ctx, const Formula& goal,
                                         int depth) {
    for (const CtxItem& it : ctx)
      if (it.f.kind() != Formula::Kind::Bang) return std::nullopt;

    const SubIndex& target = goal.index();
    // duplicate unbounded formulas are interchangeable at a promotion: one
    // kept copy serves any number of uses, and a second copy only lowers the
    // SELLS product, so the kept-set space ranges over distinct formulas
    std::vector<std::size_t> mandatory, neutral, strict;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const SubIndex& idx = ctx[i].f.index();
      if (!sig_.unbounded(idx)) {
        mandatory.push_back(i);
        continue;
      }
      if (!seen.insert(ctx[i].f.str()).second) continue;
      if (idx.kind == SubIndex::Kind::TopC ||
          (idx.kind == SubIndex::Kind::Level && idx.level == sig_.semiring().top())) {
        neutral.push_back(i);
      } else {
        strict.push_back(i);
      }
    }

    auto attempt = [&](const std::vector<std::size_t>& kept_idx) -> std::optional<ProofNode> {
      std::vector<SubIndex> indices;
      std::vector<CtxItem> kept;
      for (std::size_t i : kept_idx) {
        indices.push_back(ctx[i].f.index());
        kept.push_back(ctx[i]);
      }
      if (!sig_.promotion_ok(indices, target, mode_)) return std::nullopt;
      auto sub = search(kept, goal.body(), depth - 1);
      if (!sub) return std::nullopt;
      PromotionWitness w;
      w.target = target;
      w.kept = indices;
      if (mode_ == Mode::Sells) {
        SubIndex prod = SubIndex::top_c();
        for (const SubIndex& i : indices) prod = sig_.completed_times(prod, i);
        w.bound = prod.str();
      } else {
        w.bound = "glb";
      }
      const char* rule = mode_ == Mode::Sells ? "bang_R_S" : "bang_R";
      return ProofNode{rule, snapshot(ctx, goal), {std::move(*sub)}, std::move(w), {}, "", -1};
    };

    if (mode_ == Mode::Sell) {
      // keep everything the side condition tolerates; anything kept can
      // still be weakened later, so the maximal passing set is complete
      std::vector<std::size_t> kept = mandatory;
      kept.insert(kept.end(), neutral.begin(), neutral.end());
      for (std::size_t i : strict)
        if (sig_.preceq(target, ctx[i].f.index())) kept.push_back(i);
      return attempt(kept);
    }

    // SELLS: the passing keep-sets are downward closed (dropping a formula
    // can only raise the product) while provability from unbounded context
    // is upward monotone, so only the maximal passing subsets of the strict
    // items need recursion. Neutral items are product units and always stay.
    if (strict.size() > 16) {
      truncated_ = true;
      return std::nullopt;
    }
    std::vector<std::size_t> passing;
    for (std::size_t mask = 0; mask < (1u << strict.size()); ++mask) {
      std::vector<SubIndex> indices;
      for (std::size_t i : mandatory) indices.push_back(ctx[i].f.index());
      for (std::size_t i : neutral) indices.push_back(ctx[i].f.index());
      for (std::size_t b = 0; b < strict.size(); ++b)
        if (mask & (1u << b)) indices.push_back(ctx[strict[b]].f.index());
      if (sig_.promotion_ok(indices, target, mode_)) passing.push_back(mask);
    }
    std::vector<std::size_t> maximal;
    for (std::size_t m : passing) {
      bool is_max = true;
      for (std::size_t other : passing)
        if (other != m && (m & other) == m) { is_max = false; break; }
      if (is_max) maximal.push_back(m);
    }
    std::sort(maximal.begin(), maximal.end(), [](std::size_t a, std::size_t b) {
      return __builtin_popcountll(a) > __builtin_popcountll(b);
    });
    for (std::size_t mask : maximal) {
      std::vector<std::size_t> kept = mandatory;
      kept.insert(kept.end(), neutral.begin(), neutral.end());
      for (std::size_t b = 0; b < strict.size(); ++b)
        if (mask & (1u << b)) kept.push_back(strict[b]);
      if (auto r = attempt(kept)) return r;
    }
    return std::nullopt;
  }

  std::optional<ProofNode> try_split(const std::vector<CtxItem>& ctx, const Formula& goal,
                                     int depth) {
    std::vector<std::size_t> linear, shared;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      (weakenable(ctx[i].f) ? shared : linear).push_back(i);
    if (linear.size() > 16) {
      truncated_ = true;
      return std::nullopt;
    }
    for (std::size_t mask = 0; mask < (1u << linear.size()); ++mask) {
      std::vector<CtxItem> ctx1, ctx2;
      for (std::size_t i : shared) {
        ctx1.push_back(ctx[i]);
        ctx2.push_back(ctx[i]);
      }
      for (std::size_t b = 0; b < linear.size(); ++b)
        ((mask & (1u << b)) ? ctx1 : ctx2).push_back(ctx[linear[b]]);
      auto p1 = search(ctx1, goal.lhs(), depth - 1);
      if (!p1) continue;
      auto p2 = search(ctx2, goal.rhs(), depth - 1);
      if (!p2) continue;
      return ProofNode{"tensor_R", snapshot(ctx, goal),
                       {std::move(*p1), std::move(*p2)}, {}, {}, "", -1};
    }
    return std::nullopt;
  }

  std::optional<ProofNode> try_lolli(const std::vector<CtxItem>& ctx, std::size_t li,
                                     const Formula& goal, int depth) {
    const Formula lolli = ctx[li].f;
    std::vector<std::size_t> linear, shared;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (i == li) continue;
      (weakenable(ctx[i].f) ? shared : linear).push_back(i);
    }
    if (linear.size() > 16) {
      truncated_ = true;
      return std::nullopt;
    }
    for (std::size_t mask = 0; mask < (1u << linear.size()); ++mask) {
      std::vector<CtxItem> ctx1, ctx2;
      for (std::size_t i : shared) {
        ctx1.push_back(ctx[i]);
        ctx2.push_back(ctx[i]);
      }
      for (std::size_t b = 0; b < linear.size(); ++b)
        ((mask & (1u << b)) ? ctx1 : ctx2).push_back(ctx[linear[b]]);
      auto p1 = search(ctx1, lolli.lhs(), depth - 1);
      if (!p1) continue;
      ctx2.push_back({lolli.rhs(), limits_.copy_budget});
      auto p2 = search(ctx2, goal, depth - 1);
      if (!p2) continue;
      return ProofNode{"lolli_L", snapshot(ctx, goal),
                       {std::move(*p1), std::move(*p2)}, {}, {}, "", -1};
    }
    return std::nullopt;
  }
};

}  // namespace

ProveResult prove(const Sequent& seq, const Signature& sig, Mode mode, const SearchLimits& limits) {
  Searcher searcher(sig, mode, limits);
  ProveResult result;
  result.proof = searcher.run(seq);
  result.truncated = !result.proof && searcher.truncated();
  result.nodes = searcher.nodes();
  return result;
}

// ---------------------------------------------------------------------------
// Encodings
// ---------------------------------------------------------------------------

Formula encode_constraint(const Constraint& c) {
  switch (c.kind()) {
    case Constraint::Kind::One: return Formula::one();
    case Constraint::Kind::Tensor:
      return Formula::tensor(encode_constraint(c.lhs()), encode_constraint(c.rhs()));
    case Constraint::Kind::Exists:
      return Formula::exists(c.var(), encode_constraint(c.body()));
    case Constraint::Kind::Soft: {
      SubIndex idx = SubIndex::lvl(c.level());
      if (c.pre().atoms.size() == 1) return Formula::bang(idx, Formula::atomic(c.pre().atoms[0]));
      Formula body = Formula::bang(idx, Formula::atomic(c.pre().atoms[0]));
      for (std::size_t i = 1; i < c.pre().atoms.size(); ++i)
        body = Formula::tensor(std::move(body), Formula::bang(idx, Formula::atomic(c.pre().atoms[i])));
      return Formula::bang(idx, std::move(body));
    }
  }
  throw std::logic_error("bad constraint");
}

Formula encode_process(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::Tell:
      return Formula::bang(SubIndex::proc(), encode_constraint(p.told()));
    case Process::Kind::Sum: {
      std::vector<Formula> alts;
      alts.reserve(p.branches().size());
      for (const auto& b : p.branches())
        alts.push_back(Formula::lolli(encode_constraint(b.guard), encode_process(b.body)));
      return Formula::bang(SubIndex::proc(), Formula::with(std::move(alts)));
    }
    case Process::Kind::Par:
      return Formula::tensor(encode_process(p.lhs()), encode_process(p.rhs()));
    case Process::Kind::Local:
      return Formula::bang(SubIndex::proc(), Formula::exists(p.var(), encode_process(p.body())));
    case Process::Kind::Call:
      return Formula::bang(SubIndex::call(), Formula::atomic(Atom{p.callee(), p.call_args()}));
  }
  throw std::logic_error("bad process");
}

Formula encode_definition(const Definition& d) {
  Formula head = Formula::bang(SubIndex::call(),
                               Formula::atomic(Atom{d.name, [&] {
                                                 std::vector<Term> ts;
                                                 for (const auto& v : d.params)
                                                   ts.push_back(Term::var(v));
                                                 return ts;
                                               }()}));
  Formula body = Formula::lolli(std::move(head), encode_process(d.body));
  for (auto it = d.params.rbegin(); it != d.params.rend(); ++it)
    body = Formula::forall(*it, std::move(body));
  return Formula::bang(SubIndex::def(), std::move(body));
}

Formula encode_axiom(const Axiom& ax, const Semiring& s) {
  Formula body =
      Formula::lolli(encode_constraint(ax.premise), encode_constraint(ax.conclusion));
  for (auto it = ax.vars.rbegin(); it != ax.vars.rend(); ++it)
    body = Formula::forall(*it, std::move(body));
  return Formula::bang(SubIndex::lvl(s.top()), std::move(body));
}

std::vector<Formula> encode_store(const Store& st) {
  std::vector<Formula> out;
  out.reserve(st.entries().size());
  for (const StoreEntry& e : st.entries())
    out.push_back(encode_constraint(Constraint::soft(e.pre, e.level)));
  return out;
}

}  // namespace sccp
