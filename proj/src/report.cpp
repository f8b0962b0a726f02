#include "sccp/report.hpp"

#include "sccp/laws.hpp"

namespace sccp {

using nlohmann::json;

json store_json(const Store& st) {
  json items = json::array();
  for (const StoreEntry& e : st.entries())
    items.push_back({{"atom", e.pre.str()}, {"level", e.level.str()}, {"id", e.id}});
  return items;
}

json config_json(const Configuration& c) {
  json procs = json::array();
  for (const Process& p : c.procs) procs.push_back(p.str());
  json hidden = json::array();
  for (const std::string& h : c.hidden) hidden.push_back(h);
  return {{"procs", procs}, {"store", store_json(c.store)}, {"hidden", hidden}};
}

json trace_json(const Trace& t) {
  json steps = json::array();
  const Configuration* before = &t.initial;
  for (const auto& e : t.steps) {
    std::string selected = static_cast<std::size_t>(e.proc_index) < before->procs.size()
                               ? before->procs[e.proc_index].str()
                               : "";
    json step =
        {{"rule", rule_tag_name(e.rule)},
         {"proc", selected},
         {"proc_index", e.proc_index},
         {"store", store_json(e.config.store)},
         {"hidden", json::array()}};
    for (const std::string& h : e.config.hidden) step["hidden"].push_back(h);
    if (e.rule == RuleTag::Sum) step["branch"] = e.branch;
    json procs = json::array();
    for (const Process& p : e.config.procs) procs.push_back(p.str());
    step["procs"] = procs;
    steps.push_back(std::move(step));
    before = &e.config;
  }
  return {{"initial", config_json(t.initial)}, {"steps", steps}, {"truncated", t.truncated}};
}

json reach_json(const ReachSet& r) {
  json configs = json::array();
  for (const Configuration& c : r.configs) configs.push_back(config_json(c));
  return {{"configurations", configs}, {"truncated", r.truncated}};
}

json entail_trace_json(const EntailTrace& t) {
  json items = json::array();
  for (const auto& it : t.items) {
    items.push_back({{"atoms", it.atoms},
                     {"supports", it.supports},
                     {"bound", it.bound},
                     {"level", it.level},
                     {"verdict", it.verdict}});
  }
  json inst = json::object();
  for (const auto& [v, term] : t.instantiation) inst[v] = term;
  return {{"goal", t.goal}, {"instantiation", inst}, {"items", items}, {"verdict", t.verdict}};
}

json proof_json(const ProofNode& n) {
  json out = {{"rule", n.rule}, {"sequent", n.sequent.str()}};
  if (n.promotion) {
    json kept = json::array();
    for (const SubIndex& i : n.promotion->kept) kept.push_back(i.str());
    out["promotion"] = {{"target", n.promotion->target.str()},
                        {"kept", kept},
                        {"bound", n.promotion->bound}};
  }
  if (n.term) out["term"] = n.term->str();
  if (!n.eigen.empty()) out["eigen"] = n.eigen;
  if (n.pick >= 0) out["pick"] = n.pick;
  if (!n.premises.empty()) {
    json premises = json::array();
    for (const ProofNode& p : n.premises) premises.push_back(proof_json(p));
    out["premises"] = std::move(premises);
  }
  return out;
}

json adequacy_json(const AdequacyResult& r) {
  const char* verdict = r.verdict == AdequacyResult::Verdict::Agree        ? "agree"
                        : r.verdict == AdequacyResult::Verdict::Disagree   ? "disagree"
                                                                           : "inconclusive";
  return {{"barb", r.barb},
          {"barb_truncated", r.barb_truncated},
          {"provable", r.provable},
          {"prove_truncated", r.prove_truncated},
          {"verdict", verdict}};
}

json law_report_json(const LawReport& r) {
  json laws = json::array();
  for (const LawResult& l : r.laws)
    laws.push_back({{"law", l.law},
                    {"checked", l.checked},
                    {"failed", l.failed},
                    {"applicable", l.applicable}});
  return {{"semiring", r.semiring}, {"laws", laws}, {"all_passed", r.all_passed()}};
}

}  // namespace sccp
