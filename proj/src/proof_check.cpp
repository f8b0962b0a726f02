#include <algorithm>
#include <map>
#include <sstream>

#include "sccp/prover.hpp"

// Re-validates a proof tree node by node against the rule schemas. Kept
// deliberately independent of the search: it only reads conclusion/premise
// sequents plus the recorded witnesses. Structural admissibility of
// weakening/contraction on unbounded formulas is folded into the schemas:
// unbounded context formulas may appear in premises with any multiplicity,
// linear ones must be accounted for exactly.

namespace sccp {

namespace {

// Alpha-invariant printing: binders get positional names.
std::string canon_str(const Formula& f, std::map<std::string, std::string>& bound, int& depth) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: {
      Atom a = f.atom();
      Subst m;
      for (const auto& [k, v] : bound) m[k] = Term::var(v);
      return substitute(a, m).str();
    }
    case Formula::Kind::One: return "1";
    case Formula::Kind::Top: return "top";
    case Formula::Kind::Tensor:
      return "(" + canon_str(f.lhs(), bound, depth) + " * " + canon_str(f.rhs(), bound, depth) + ")";
    case Formula::Kind::Lolli:
      return "(" + canon_str(f.lhs(), bound, depth) + " -o " + canon_str(f.rhs(), bound, depth) + ")";
    case Formula::Kind::With: {
      std::string out = "(";
      for (std::size_t i = 0; i < f.parts().size(); ++i) {
        if (i) out += " & ";
        out += canon_str(f.parts()[i], bound, depth);
      }
      return out + ")";
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string name = "b" + std::to_string(depth++);
      auto saved = bound;
      bound[f.var()] = name;
      std::string body = canon_str(f.body(), bound, depth);
      bound = saved;
      return std::string(f.kind() == Formula::Kind::Exists ? "(ex " : "(all ") + name + ". " +
             body + ")";
    }
    case Formula::Kind::Bang:
      return "!{" + f.index().str() + "} " + canon_str(f.body(), bound, depth);
  }
  return "?";
}

std::string canon(const Formula& f) {
  std::map<std::string, std::string> bound;
  int depth = 0;
  return canon_str(f, bound, depth);
}

bool alpha_eq(const Formula& a, const Formula& b) { return canon(a) == canon(b); }

using Multiset = std::map<std::string, int>;

Multiset multiset_of(const std::vector<Formula>& fs) {
  Multiset m;
  for (const Formula& f : fs) ++m[canon(f)];
  return m;
}

bool is_weakenable(const Formula& f, const Signature& sig) {
  return f.kind() == Formula::Kind::Bang && sig.unbounded(f.index());
}

Multiset linear_part(const std::vector<Formula>& fs, const Signature& sig) {
  Multiset m;
  for (const Formula& f : fs)
    if (!is_weakenable(f, sig)) ++m[canon(f)];
  return m;
}

std::set<std::string> unbounded_part(const std::vector<Formula>& fs, const Signature& sig) {
  std::set<std::string> s;
  for (const Formula& f : fs)
    if (is_weakenable(f, sig)) s.insert(canon(f));
  return s;
}

bool multiset_sum_eq(const Multiset& a, const Multiset& b, const Multiset& whole) {
  Multiset sum = a;
  for (const auto& [k, v] : b) sum[k] += v;
  for (auto it = sum.begin(); it != sum.end();) {
    if (it->second == 0) it = sum.erase(it);
    else ++it;
  }
  Multiset w = whole;
  for (auto it = w.begin(); it != w.end();) {
    if (it->second == 0) it = w.erase(it);
    else ++it;
  }
  return sum == w;
}

struct Checker {
  const Signature& sig;
  Mode mode;
  std::string* why;
  NameSource scratch;

  bool fail(const ProofNode& n, const std::string& msg) {
    if (why) *why = n.rule + " at [" + n.sequent.str() + "]: " + msg;
    return false;
  }

  // premise context must match conclusion context with `from` (one
  // occurrence) replaced by `to`
  bool replaced(const ProofNode& n, const Formula& from, const std::vector<Formula>& to) {
    std::vector<Formula> expect;
    bool used = false;
    for (const Formula& f : n.sequent.context) {
      if (!used && alpha_eq(f, from)) {
        used = true;
        for (const Formula& t : to) expect.push_back(t);
      } else {
        expect.push_back(f);
      }
    }
    if (!used) return false;
    return multiset_of(expect) == multiset_of(n.premises[0].sequent.context);
  }

  bool check(const ProofNode& n) {
    const Sequent& s = n.sequent;
    const std::string& r = n.rule;

    auto premise_goal_is = [&](std::size_t i, const Formula& g) {
      return alpha_eq(n.premises[i].sequent.goal, g);
    };

    if (r == "top_R") {
      if (s.goal.kind() != Formula::Kind::Top) return fail(n, "goal is not top");
      if (!n.premises.empty()) return fail(n, "leaf rule with premises");
      return true;
    }
    if (r == "one_R") {
      if (s.goal.kind() != Formula::Kind::One) return fail(n, "goal is not 1");
      if (!n.premises.empty()) return fail(n, "leaf rule with premises");
      for (const Formula& f : s.context)
        if (!is_weakenable(f, sig)) return fail(n, "non-weakenable context at 1R");
      return true;
    }
    if (r == "init") {
      if (s.goal.kind() != Formula::Kind::Atomic) return fail(n, "goal is not atomic");
      if (!n.premises.empty()) return fail(n, "leaf rule with premises");
      int bare = 0;
      for (const Formula& f : s.context) {
        if (is_weakenable(f, sig)) continue;
        if (f.kind() != Formula::Kind::Atomic || !(f.atom() == s.goal.atom()))
          return fail(n, "non-weakenable context formula is not the goal atom");
        ++bare;
      }
      if (bare != 1) return fail(n, "init needs exactly one linear copy of the atom");
      return true;
    }

    if (n.premises.empty()) return fail(n, "missing premises");
    const Sequent& p0 = n.premises[0].sequent;

    if (r == "one_L") {
      if (!premise_goal_is(0, s.goal)) return fail(n, "goal changed");
      if (!replaced(n, Formula::one(), {})) return fail(n, "context mismatch");
    } else if (r == "tensor_L") {
      bool ok = false;
      for (const Formula& f : s.context)
        if (f.kind() == Formula::Kind::Tensor && replaced(n, f, {f.lhs(), f.rhs()})) {
          ok = true;
          break;
        }
      if (!ok || !premise_goal_is(0, s.goal)) return fail(n, "context mismatch");
    } else if (r == "exists_L" || r == "forall_R") {
      if (n.eigen.empty()) return fail(n, "missing eigenvariable");
      std::set<std::string> fv;
      for (const Formula& f : s.context) fv.merge(free_vars(f));
      fv.merge(free_vars(s.goal));
      if (fv.count(n.eigen)) return fail(n, "eigenvariable not fresh");
      Subst m{{r == "exists_L" ? std::string() : std::string(), Term::var(n.eigen)}};
      m.clear();
      if (r == "exists_L") {
        bool ok = false;
        for (const Formula& f : s.context) {
          if (f.kind() != Formula::Kind::Exists) continue;
          Formula body = substitute(f.body(), {{f.var(), Term::var(n.eigen)}}, scratch);
          if (replaced(n, f, {body})) { ok = true; break; }
        }
        if (!ok || !premise_goal_is(0, s.goal)) return fail(n, "context mismatch");
      } else {
        if (s.goal.kind() != Formula::Kind::Forall) return fail(n, "goal is not forall");
        Formula body = substitute(s.goal.body(), {{s.goal.var(), Term::var(n.eigen)}}, scratch);
        if (!premise_goal_is(0, body)) return fail(n, "premise goal mismatch");
        if (multiset_of(s.context) != multiset_of(p0.context)) return fail(n, "context changed");
      }
    } else if (r == "lolli_R") {
      if (s.goal.kind() != Formula::Kind::Lolli) return fail(n, "goal is not lolli");
      std::vector<Formula> expect = s.context;
      expect.push_back(s.goal.lhs());
      if (multiset_of(expect) != multiset_of(p0.context)) return fail(n, "context mismatch");
      if (!premise_goal_is(0, s.goal.rhs())) return fail(n, "premise goal mismatch");
    } else if (r == "with_R") {
      if (s.goal.kind() != Formula::Kind::With) return fail(n, "goal is not with");
      if (n.premises.size() != s.goal.parts().size()) return fail(n, "premise count");
      for (std::size_t i = 0; i < n.premises.size(); ++i) {
        if (!premise_goal_is(i, s.goal.parts()[i])) return fail(n, "premise goal mismatch");
        if (multiset_of(s.context) != multiset_of(n.premises[i].sequent.context))
          return fail(n, "context changed");
      }
    } else if (r == "exists_R") {
      if (s.goal.kind() != Formula::Kind::Exists || !n.term) return fail(n, "bad exists_R");
      Formula inst = substitute(s.goal.body(), {{s.goal.var(), *n.term}}, scratch);
      if (!premise_goal_is(0, inst)) return fail(n, "premise goal mismatch");
      if (multiset_of(s.context) != multiset_of(p0.context)) return fail(n, "context changed");
    } else if (r == "forall_L") {
      if (!n.term) return fail(n, "missing witness term");
      bool ok = false;
      for (const Formula& f : s.context) {
        if (f.kind() != Formula::Kind::Forall) continue;
        Formula inst = substitute(f.body(), {{f.var(), *n.term}}, scratch);
        if (replaced(n, f, {inst})) { ok = true; break; }
      }
      if (!ok || !premise_goal_is(0, s.goal)) return fail(n, "context mismatch");
    } else if (r == "with_L") {
      if (n.pick < 0) return fail(n, "missing component index");
      bool ok = false;
      for (const Formula& f : s.context) {
        if (f.kind() != Formula::Kind::With) continue;
        if (static_cast<std::size_t>(n.pick) >= f.parts().size()) continue;
        if (replaced(n, f, {f.parts()[n.pick]})) { ok = true; break; }
      }
      if (!ok || !premise_goal_is(0, s.goal)) return fail(n, "context mismatch");
    } else if (r == "bang_L") {
      bool ok = false;
      for (const Formula& f : s.context) {
        if (f.kind() != Formula::Kind::Bang || sig.unbounded(f.index())) continue;
        if (replaced(n, f, {f.body()})) { ok = true; break; }
      }
      if (!ok || !premise_goal_is(0, s.goal)) return fail(n, "context mismatch");
    } else if (r == "copy") {
      bool ok = false;
      for (const Formula& f : s.context) {
        if (f.kind() != Formula::Kind::Bang || !sig.unbounded(f.index())) continue;
        std::vector<Formula> expect = s.context;
        expect.push_back(f.body());
        if (multiset_of(expect) == multiset_of(p0.context)) { ok = true; break; }
      }
      if (!ok || !premise_goal_is(0, s.goal)) return fail(n, "context mismatch");
    } else if (r == "tensor_R") {
      if (s.goal.kind() != Formula::Kind::Tensor || n.premises.size() != 2)
        return fail(n, "bad tensor_R");
      if (!premise_goal_is(0, s.goal.lhs()) || !premise_goal_is(1, s.goal.rhs()))
        return fail(n, "premise goals mismatch");
      const auto& c1 = n.premises[0].sequent.context;
      const auto& c2 = n.premises[1].sequent.context;
      if (!multiset_sum_eq(linear_part(c1, sig), linear_part(c2, sig),
                           linear_part(s.context, sig)))
        return fail(n, "linear context not partitioned");
      auto allowed = unbounded_part(s.context, sig);
      for (const auto& u : unbounded_part(c1, sig))
        if (!allowed.count(u)) return fail(n, "foreign unbounded formula");
      for (const auto& u : unbounded_part(c2, sig))
        if (!allowed.count(u)) return fail(n, "foreign unbounded formula");
    } else if (r == "lolli_L") {
      if (n.premises.size() != 2) return fail(n, "bad lolli_L");
      if (!premise_goal_is(1, s.goal)) return fail(n, "right premise goal mismatch");
      bool ok = false;
      for (const Formula& f : s.context) {
        if (f.kind() != Formula::Kind::Lolli) continue;
        if (!alpha_eq(n.premises[0].sequent.goal, f.lhs())) continue;
        // right premise context minus one occurrence of H
        std::vector<Formula> c2 = n.premises[1].sequent.context;
        bool removed = false;
        for (std::size_t i = 0; i < c2.size(); ++i)
          if (alpha_eq(c2[i], f.rhs())) {
            c2.erase(c2.begin() + i);
            removed = true;
            break;
          }
        if (!removed) continue;
        std::vector<Formula> rest;
        bool dropped = false;
        for (const Formula& g : s.context) {
          if (!dropped && alpha_eq(g, f)) { dropped = true; continue; }
          rest.push_back(g);
        }
        if (!multiset_sum_eq(linear_part(n.premises[0].sequent.context, sig),
                             linear_part(c2, sig), linear_part(rest, sig)))
          continue;
        auto allowed = unbounded_part(rest, sig);
        bool foreign = false;
        for (const auto& u : unbounded_part(n.premises[0].sequent.context, sig))
          if (!allowed.count(u)) foreign = true;
        for (const auto& u : unbounded_part(c2, sig))
          if (!allowed.count(u)) foreign = true;
        if (foreign) continue;
        ok = true;
        break;
      }
      if (!ok) return fail(n, "no lolli item fits the premises");
    } else if (r == "bang_R" || r == "bang_R_S") {
      if ((mode == Mode::Sells) != (r == "bang_R_S")) return fail(n, "promotion rule of wrong system");
      if (s.goal.kind() != Formula::Kind::Bang) return fail(n, "goal is not banged");
      if (!premise_goal_is(0, s.goal.body())) return fail(n, "premise goal mismatch");
      // premise context: subset of the conclusion context, dropped part
      // weakenable, all banged
      Multiset concl = multiset_of(s.context);
      Multiset prem = multiset_of(p0.context);
      for (const auto& [k, v] : prem)
        if (concl[k] < v) return fail(n, "promotion invented context");
      std::map<std::string, const Formula*> by_canon;
      for (const Formula& f : s.context) by_canon[canon(f)] = &f;
      for (const auto& [k, v] : concl) {
        int kept = prem.count(k) ? prem.at(k) : 0;
        if (kept < v && !is_weakenable(*by_canon[k], sig))
          return fail(n, "dropped a non-weakenable formula");
      }
      std::vector<SubIndex> indices;
      for (const Formula& f : p0.context) {
        if (f.kind() != Formula::Kind::Bang) return fail(n, "unbanged formula at promotion");
        indices.push_back(f.index());
      }
      if (!sig.promotion_ok(indices, s.goal.index(), mode))
        return fail(n, "promotion side condition fails");
      if (n.promotion) {
        if (!(n.promotion->target == s.goal.index())) return fail(n, "witness target mismatch");
      }
    } else {
      return fail(n, "unknown rule");
    }

    for (const ProofNode& p : n.premises)
      if (!check(p)) return false;
    return true;
  }
};

}  // namespace

bool validate_proof(const ProofNode& root, const Signature& sig, Mode mode, std::string* why) {
  Checker c{sig, mode, why, {}};
  c.scratch.next = 700000;
  return c.check(root);
}

}  // namespace sccp
