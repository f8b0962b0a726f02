#include "sccp/interpreter.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sccp {

const char* rule_tag_name(RuleTag t) {
  switch (t) {
    case RuleTag::Tell: return "TELL";
    case RuleTag::Sum: return "SUM";
    case RuleTag::Local: return "LOCAL";
    case RuleTag::Call: return "CALL";
    case RuleTag::Equiv: return "EQUIV";
  }
  return "?";
}

namespace {

void flatten_into(const Process& p, std::vector<Process>& out) {
  if (p.kind() == Process::Kind::Par) {
    flatten_into(p.lhs(), out);
    flatten_into(p.rhs(), out);
  } else {
    out.push_back(p);
  }
}

void check_arities(const Program& p, const Process& proc, std::string where) {
  switch (proc.kind()) {
    case Process::Kind::Tell: return;
    case Process::Kind::Sum:
      for (const auto& b : proc.branches()) check_arities(p, b.body, where);
      return;
    case Process::Kind::Par:
      check_arities(p, proc.lhs(), where);
      check_arities(p, proc.rhs(), where);
      return;
    case Process::Kind::Local:
      check_arities(p, proc.body(), where);
      return;
    case Process::Kind::Call: {
      auto it = p.defs.find(proc.callee());
      if (it == p.defs.end())
        throw std::invalid_argument(where + ": call to undefined process " + proc.callee());
      if (it->second.params.size() != proc.call_args().size())
        throw std::invalid_argument(where + ": " + proc.callee() + " expects " +
                                    std::to_string(it->second.params.size()) + " arguments, got " +
                                    std::to_string(proc.call_args().size()));
      return;
    }
  }
}

}  // namespace

void validate_program(const Program& p) {
  for (const auto& [name, def] : p.defs) {
    std::set<std::string> params(def.params.begin(), def.params.end());
    if (params.size() != def.params.size())
      throw std::invalid_argument("definition " + name + " repeats a parameter");
    for (const std::string& v : free_vars(def.body))
      if (!params.count(v))
        throw std::invalid_argument("definition " + name + " leaves " + v + " free");
    check_arities(p, def.body, "definition " + name);
  }
  for (const Process& proc : p.main_procs) check_arities(p, proc, "main");
}

Configuration initial_config(const Program& p) {
  Configuration c;
  for (const Process& proc : p.main_procs) flatten_into(proc, c.procs);
  return c;
}

std::vector<StepResult> step(const Program& p, const Configuration& c, NameSource& fresh) {
  std::vector<StepResult> out;
  for (std::size_t i = 0; i < c.procs.size(); ++i) {
    const Process& proc = c.procs[i];
    auto without_i = [&]() {
      Configuration next = c;
      next.procs.erase(next.procs.begin() + i);
      return next;
    };
    switch (proc.kind()) {
      case Process::Kind::Tell: {
        Configuration next = without_i();
        next.store = next.store.add(proc.told(), p.semiring, fresh);
        for (const std::string& v : next.store.hidden()) next.hidden.insert(v);
        out.push_back({std::move(next), RuleTag::Tell, static_cast<int>(i), -1});
        break;
      }
      case Process::Kind::Sum: {
        for (std::size_t j = 0; j < proc.branches().size(); ++j) {
          const auto& br = proc.branches()[j];
          if (!entails(c.store, p.axioms, br.guard, p.mode, p.semiring, p.entail_bound)) continue;
          Configuration next = without_i();
          std::vector<Process> body;
          flatten_into(br.body, body);
          next.procs.insert(next.procs.begin() + i, body.begin(), body.end());
          out.push_back({std::move(next), RuleTag::Sum, static_cast<int>(i),
                         static_cast<int>(j)});
        }
        break;
      }
      case Process::Kind::Par: {
        // kept flattened by construction; tolerate anyway
        Configuration next = without_i();
        std::vector<Process> body;
        flatten_into(proc, body);
        next.procs.insert(next.procs.begin() + i, body.begin(), body.end());
        out.push_back({std::move(next), RuleTag::Equiv, static_cast<int>(i), -1});
        break;
      }
      case Process::Kind::Local: {
        std::string name = fresh.fresh();
        Process body = substitute(proc.body(), {{proc.var(), Term::var(name)}}, fresh);
        Configuration next = without_i();
        next.hidden.insert(name);
        std::vector<Process> flat;
        flatten_into(body, flat);
        next.procs.insert(next.procs.begin() + i, flat.begin(), flat.end());
        out.push_back({std::move(next), RuleTag::Local, static_cast<int>(i), -1});
        break;
      }
      case Process::Kind::Call: {
        auto it = p.defs.find(proc.callee());
        if (it == p.defs.end())
          throw std::invalid_argument("call to undefined process " + proc.callee());
        const Definition& def = it->second;
        if (def.params.size() != proc.call_args().size())
          throw std::invalid_argument("arity mismatch calling " + proc.callee());
        Subst map;
        for (std::size_t k = 0; k < def.params.size(); ++k)
          map[def.params[k]] = proc.call_args()[k];
        Process body = substitute(def.body, map, fresh);
        Configuration next = without_i();
        std::vector<Process> flat;
        flatten_into(body, flat);
        next.procs.insert(next.procs.begin() + i, flat.begin(), flat.end());
        out.push_back({std::move(next), RuleTag::Call, static_cast<int>(i), -1});
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical keys
// ---------------------------------------------------------------------------

namespace {

// Prints a process with Local binders renamed positionally; free variables
// (program vars and hidden names) print as themselves.
std::string canon_proc(const Process& p, std::map<std::string, std::string>& bound, int& depth) {
  auto canon_constraint = [&](const Constraint& c) {
    Subst m;
    for (const auto& [k, v] : bound) m[k] = Term::var(v);
    NameSource scratch;
    scratch.next = 600000;
    return substitute(c, m, scratch).str();
  };
  switch (p.kind()) {
    case Process::Kind::Tell:
      return "tell " + canon_constraint(p.told());
    case Process::Kind::Sum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < p.branches().size(); ++i) {
        if (i) out += " + ";
        out += "ask " + canon_constraint(p.branches()[i].guard) + " then " +
               canon_proc(p.branches()[i].body, bound, depth);
      }
      return out + ")";
    }
    case Process::Kind::Par:
      return "(" + canon_proc(p.lhs(), bound, depth) + " || " + canon_proc(p.rhs(), bound, depth) +
             ")";
    case Process::Kind::Local: {
      std::string name = "lb" + std::to_string(depth++);
      auto saved = bound;
      bound[p.var()] = name;
      std::string body = canon_proc(p.body(), bound, depth);
      bound = saved;
      return "new " + name + " in " + body;
    }
    case Process::Kind::Call: {
      std::string out = p.callee() + "(";
      Subst m;
      for (const auto& [k, v] : bound) m[k] = Term::var(v);
      for (std::size_t i = 0; i < p.call_args().size(); ++i) {
        if (i) out += ", ";
        out += substitute(p.call_args()[i], m).str();
      }
      return out + ")";
    }
  }
  return "?";
}

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::string canonical_key(const Configuration& c) {
  // first pass: binder-canonical prints with hidden names untouched
  std::vector<std::string> proc_strs;
  for (const Process& p : c.procs) {
    std::map<std::string, std::string> bound;
    int depth = 0;
    proc_strs.push_back(canon_proc(p, bound, depth));
  }
  std::sort(proc_strs.begin(), proc_strs.end());
  std::string base;
  for (const auto& s : proc_strs) base += s + " ; ";
  base += "## " + c.store.canonical_str();

  // second pass: hidden names renamed by first occurrence
  std::map<std::string, std::string> rename;
  int next = 0;
  for (std::size_t i = 0; i < base.size();) {
    if (!is_ident_char(base[i])) { ++i; continue; }
    std::size_t j = i;
    while (j < base.size() && is_ident_char(base[j])) ++j;
    std::string tok = base.substr(i, j - i);
    if (c.hidden.count(tok) && !rename.count(tok))
      rename[tok] = "h" + std::to_string(next++);
    i = j;
  }
  for (const std::string& h : c.hidden)
    if (!rename.count(h)) rename[h] = "h" + std::to_string(next++);

  Subst m;
  for (const auto& [k, v] : rename) m[k] = Term::var(v);
  NameSource scratch;
  scratch.next = 650000;

  std::vector<std::string> renamed;
  for (const Process& p : c.procs) {
    std::map<std::string, std::string> bound;
    int depth = 0;
    renamed.push_back(canon_proc(substitute(p, m, scratch), bound, depth));
  }
  std::sort(renamed.begin(), renamed.end());
  std::string out;
  for (const auto& s : renamed) out += s + " ; ";

  std::vector<std::string> entries;
  for (const StoreEntry& e : c.store.entries()) {
    PreConstraint pc;
    for (const Atom& a : e.pre.atoms) pc.atoms.push_back(substitute(c.store.eq().canon(a), m));
    std::sort(pc.atoms.begin(), pc.atoms.end());
    entries.push_back("[" + pc.str() + "]@" + e.level.str());
  }
  std::sort(entries.begin(), entries.end());
  out += "## ";
  for (const auto& e : entries) out += e + "; ";
  return out;
}

// ---------------------------------------------------------------------------
// Exploration
// ---------------------------------------------------------------------------

ReachSet run_exhaustive(const Program& p, int max_steps, NameSource& fresh) {
  ReachSet out;
  Configuration init = initial_config(p);
  std::map<std::string, bool> visited;
  std::deque<std::pair<Configuration, int>> frontier;
  visited[canonical_key(init)] = true;
  out.configs.push_back(init);
  frontier.emplace_back(std::move(init), 0);
  while (!frontier.empty()) {
    auto [config, depth] = frontier.front();
    frontier.pop_front();
    std::vector<StepResult> succs = step(p, config, fresh);
    if (depth >= max_steps) {
      if (!succs.empty()) out.truncated = true;
      continue;
    }
    for (StepResult& s : succs) {
      std::string key = canonical_key(s.config);
      if (visited.count(key)) continue;
      visited[key] = true;
      out.configs.push_back(s.config);
      frontier.emplace_back(std::move(s.config), depth + 1);
    }
  }
  return out;
}

namespace {
std::uint64_t mix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

Trace run_random(const Program& p, std::uint64_t seed, int max_steps, NameSource& fresh) {
  Trace trace;
  trace.initial = initial_config(p);
  Configuration current = trace.initial;
  std::uint64_t state = seed;
  for (int i = 0; i < max_steps; ++i) {
    std::vector<StepResult> succs = step(p, current, fresh);
    if (succs.empty()) return trace;
    StepResult& chosen = succs[mix(state) % succs.size()];
    trace.steps.push_back({chosen.config, chosen.rule, chosen.proc_index, chosen.branch});
    current = std::move(chosen.config);
  }
  if (!step(p, current, fresh).empty()) trace.truncated = true;
  return trace;
}

BarbResult barb(const Program& p, const Constraint& goal, int max_steps, NameSource& fresh) {
  ReachSet reach = run_exhaustive(p, max_steps, fresh);
  for (const Configuration& c : reach.configs)
    if (entails(c.store, p.axioms, goal, p.mode, p.semiring, p.entail_bound))
      return {true, false};
  return {false, reach.truncated};
}

// ---------------------------------------------------------------------------
// Single-rule checker, independent of step()
// ---------------------------------------------------------------------------

bool check_step(const Program& p, const Configuration& from, const StepResult& to,
                std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (to.proc_index < 0 || static_cast<std::size_t>(to.proc_index) >= from.procs.size())
    return fail("process index out of range");
  const Process& proc = from.procs[to.proc_index];

  // expected successor, recomputed by direct rule reading
  Configuration expect = from;
  expect.procs.erase(expect.procs.begin() + to.proc_index);
  NameSource scratch;
  scratch.next = 500000;

  switch (to.rule) {
    case RuleTag::Tell: {
      if (proc.kind() != Process::Kind::Tell) return fail("TELL on a non-tell");
      expect.store = expect.store.add(proc.told(), p.semiring, scratch);
      for (const std::string& v : expect.store.hidden()) expect.hidden.insert(v);
      break;
    }
    case RuleTag::Sum: {
      if (proc.kind() != Process::Kind::Sum) return fail("SUM on a non-sum");
      if (to.branch < 0 || static_cast<std::size_t>(to.branch) >= proc.branches().size())
        return fail("branch out of range");
      const auto& br = proc.branches()[to.branch];
      if (!entails(from.store, p.axioms, br.guard, p.mode, p.semiring, p.entail_bound))
        return fail("guard not entailed");
      std::vector<Process> flat;
      flatten_into(br.body, flat);
      expect.procs.insert(expect.procs.begin() + to.proc_index, flat.begin(), flat.end());
      break;
    }
    case RuleTag::Local: {
      if (proc.kind() != Process::Kind::Local) return fail("LOCAL on a non-local");
      std::vector<std::string> added;
      for (const std::string& h : to.config.hidden)
        if (!from.hidden.count(h)) added.push_back(h);
      if (added.size() != 1) return fail("LOCAL must add exactly one hidden name");
      if (free_vars(proc).count(added[0])) return fail("hidden name not fresh");
      expect.hidden.insert(added[0]);
      Process body = substitute(proc.body(), {{proc.var(), Term::var(added[0])}}, scratch);
      std::vector<Process> flat;
      flatten_into(body, flat);
      expect.procs.insert(expect.procs.begin() + to.proc_index, flat.begin(), flat.end());
      break;
    }
    case RuleTag::Call: {
      if (proc.kind() != Process::Kind::Call) return fail("CALL on a non-call");
      auto it = p.defs.find(proc.callee());
      if (it == p.defs.end()) return fail("undefined process");
      Subst map;
      for (std::size_t k = 0; k < it->second.params.size(); ++k)
        map[it->second.params[k]] = proc.call_args()[k];
      Process body = substitute(it->second.body, map, scratch);
      std::vector<Process> flat;
      flatten_into(body, flat);
      expect.procs.insert(expect.procs.begin() + to.proc_index, flat.begin(), flat.end());
      break;
    }
    case RuleTag::Equiv: {
      // only the structural flattening of a stray parallel composition
      if (proc.kind() != Process::Kind::Par) return fail("EQUIV on a non-par");
      std::vector<Process> flat;
      flatten_into(proc, flat);
      expect.procs.insert(expect.procs.begin() + to.proc_index, flat.begin(), flat.end());
      break;
    }
  }
  if (canonical_key(expect) != canonical_key(to.config)) return fail("successor mismatch");
  return true;
}

}  // namespace sccp
