#include <doctest.h>

#include "sccp/parser.hpp"
#include "sccp/report.hpp"

using namespace sccp;
using nlohmann::json;

// Structural conformance with the shipped schemas in docs/schemas/.

TEST_CASE("trace JSON carries the documented fields") {
  Program p = parse_program(
      "semiring fuzzy; main = tell [c]@0.7 || ask [c]@0.3 then tell [d]@1;");
  NameSource ns;
  Trace t = run_random(p, 1, 10, ns);
  json j = trace_json(t);
  REQUIRE(j.contains("initial"));
  REQUIRE(j.contains("steps"));
  REQUIRE(j["truncated"].is_boolean());
  for (const auto& step : j["steps"]) {
    CHECK(step["rule"].is_string());
    std::string rule = step["rule"];
    CHECK((rule == "TELL" || rule == "SUM" || rule == "LOCAL" || rule == "CALL" ||
           rule == "EQUIV"));
    CHECK(step["proc"].is_string());
    CHECK(step["proc_index"].is_number_integer());
    CHECK(step["store"].is_array());
    for (const auto& e : step["store"]) {
      CHECK(e["atom"].is_string());
      CHECK(e["level"].is_string());
    }
    CHECK(step["hidden"].is_array());
    if (rule == "SUM") CHECK(step["branch"].is_number_integer());
  }
}

TEST_CASE("entailment trace JSON carries the documented fields") {
  Semiring pr = Semiring::named("prob");
  NameSource ns;
  Store st;
  st = st.add(parse_constraint("[c]@0.7 * [d]@0.2", pr), pr, ns);
  EntailTrace t = entails_traced(st, {}, parse_constraint("ex X. [c*d]@0.14", pr),
                                 Mode::Sells, pr);
  json j = entail_trace_json(t);
  CHECK(j["goal"].is_string());
  CHECK(j["instantiation"].is_object());
  CHECK(j["verdict"].is_boolean());
  REQUIRE(j["items"].is_array());
  for (const auto& item : j["items"]) {
    CHECK(item["atoms"].is_string());
    CHECK(item["supports"].is_array());
    CHECK(item["bound"].is_string());
    CHECK(item["level"].is_string());
    CHECK(item["verdict"].is_boolean());
  }
}

TEST_CASE("proof JSON carries the documented fields and rule names") {
  Semiring pr = Semiring::named("prob");
  Sequent seq = parse_sequent("!{0.7} c, !{0.2} d |- !{0.14} (!{0.14} c * !{0.14} d)", pr);
  ProveResult r = prove(seq, Signature(pr), Mode::Sells, {});
  REQUIRE(r.proof);
  json j = proof_json(*r.proof);
  const std::set<std::string> rules = {
      "init",     "one_L",    "one_R",    "top_R",   "tensor_L", "tensor_R",
      "lolli_L",  "lolli_R",  "with_L",   "with_R",  "exists_L", "exists_R",
      "forall_L", "forall_R", "bang_L",   "copy",    "bang_R",   "bang_R_S"};
  std::function<void(const json&)> walk = [&](const json& node) {
    CHECK(rules.count(node["rule"].get<std::string>()) == 1);
    CHECK(node["sequent"].is_string());
    if (node.contains("promotion")) {
      CHECK(node["promotion"]["target"].is_string());
      CHECK(node["promotion"]["kept"].is_array());
    }
    if (node.contains("premises"))
      for (const auto& p : node["premises"]) walk(p);
  };
  walk(j);
  // a SELLS promotion appears somewhere with its witness
  bool saw_promotion = false;
  std::function<void(const json&)> find = [&](const json& node) {
    if (node["rule"] == "bang_R_S") saw_promotion = true;
    if (node.contains("premises"))
      for (const auto& p : node["premises"]) find(p);
  };
  find(j);
  CHECK(saw_promotion);
}
