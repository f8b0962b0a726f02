#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sccp/laws.hpp"
#include "sccp/parser.hpp"
#include "sccp/report.hpp"

namespace py = pybind11;
using namespace sccp;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

std::vector<Axiom> axioms_from(const std::vector<std::string>& texts, const Semiring& s) {
  std::vector<Axiom> out;
  for (const std::string& t : texts) {
    auto pos = t.find("=>");
    if (pos == std::string::npos) throw std::invalid_argument("axiom needs '=>': " + t);
    Axiom ax;
    ax.premise = parse_constraint(t.substr(0, pos), s);
    ax.conclusion = parse_constraint(t.substr(pos + 2), s);
    std::set<std::string> vars = free_vars(ax.premise);
    vars.merge(free_vars(ax.conclusion));
    ax.vars.assign(vars.begin(), vars.end());
    out.push_back(std::move(ax));
  }
  return out;
}

Store store_from(const std::string& text, const Semiring& s) {
  NameSource ns;
  Store st;
  return st.add(parse_constraint(text, s), s, ns);
}

}  // namespace

PYBIND11_MODULE(sccp, m) {
  m.doc() = "soft concurrent constraint programming: interpreter, entailment engine and "
            "bounded sequent prover over c-semiring preference levels";

  py::class_<Level>(m, "Level")
      .def("__repr__", [](const Level& v) { return v.str(); })
      .def("__str__", [](const Level& v) { return v.str(); })
      .def("__eq__", [](const Level& a, const Level& b) { return a == b; });

  py::class_<Semiring>(m, "Semiring")
      .def(py::init([](const std::string& name) { return Semiring::named(name); }),
           py::arg("name"))
      .def_property_readonly("name", &Semiring::name)
      .def_property_readonly("idempotent_times", &Semiring::idempotent_times)
      .def("top", &Semiring::top)
      .def("bottom", &Semiring::bottom)
      .def("parse_level", [](const Semiring& s, const std::string& t) { return s.parse_level(t); })
      .def("plus", &Semiring::plus)
      .def("times", &Semiring::times)
      .def("leq", &Semiring::leq)
      .def("glb",
           [](const Semiring& s, const std::vector<Level>& vs) { return s.glb(vs); })
      .def("fold_times",
           [](const Semiring& s, const std::vector<Level>& vs) { return s.fold_times(vs); })
      .def("__repr__", [](const Semiring& s) { return "Semiring(" + s.name() + ")"; });

  py::class_<Program>(m, "Program")
      .def_property_readonly("semiring", [](const Program& p) { return p.semiring; })
      .def_property_readonly("mode", [](const Program& p) { return std::string(mode_name(p.mode)); })
      .def("run_random",
           [](const Program& p, std::uint64_t seed, int max_steps) {
             NameSource ns;
             return json_to_py(trace_json(run_random(p, seed, max_steps, ns)));
           },
           py::arg("seed") = 0, py::arg("max_steps") = 1000)
      .def("run_exhaustive",
           [](const Program& p, int max_steps) {
             NameSource ns;
             return json_to_py(reach_json(run_exhaustive(p, max_steps, ns)));
           },
           py::arg("max_steps") = 1000)
      .def("barb",
           [](const Program& p, const std::string& goal, int max_steps) {
             NameSource ns;
             BarbResult r = barb(p, parse_constraint(goal, p.semiring), max_steps, ns);
             return py::make_tuple(r.found, r.truncated);
           },
           py::arg("goal"), py::arg("max_steps") = 1000)
      .def("adequacy",
           [](const Program& p, const std::string& goal, int depth, int max_steps) {
             AdequacyResult r =
                 adequacy_check(p, parse_constraint(goal, p.semiring), depth, max_steps);
             return json_to_py(adequacy_json(r));
           },
           py::arg("goal"), py::arg("depth") = 22, py::arg("max_steps") = 30);

  m.def("parse_program", &parse_program, py::arg("text"),
        "parse a program (semiring/mode headers, axioms, defs, main)");

  m.def(
      "entail",
      [](const std::string& semiring, const std::string& mode, const std::string& store,
         const std::string& goal, const std::vector<std::string>& axioms, int bound) {
        Semiring s = Semiring::named(semiring);
        return entails(store_from(store, s), axioms_from(axioms, s),
                       parse_constraint(goal, s), mode_named(mode), s, bound);
      },
      py::arg("semiring"), py::arg("mode"), py::arg("store"), py::arg("goal"),
      py::arg("axioms") = std::vector<std::string>{}, py::arg("bound") = 3,
      "store entailment under the SELL (glb) or SELLS (product) discipline");

  m.def(
      "entail_trace",
      [](const std::string& semiring, const std::string& mode, const std::string& store,
         const std::string& goal, const std::vector<std::string>& axioms, int bound) {
        Semiring s = Semiring::named(semiring);
        EntailTrace t = entails_traced(store_from(store, s), axioms_from(axioms, s),
                                       parse_constraint(goal, s), mode_named(mode), s, bound);
        return json_to_py(entail_trace_json(t));
      },
      py::arg("semiring"), py::arg("mode"), py::arg("store"), py::arg("goal"),
      py::arg("axioms") = std::vector<std::string>{}, py::arg("bound") = 3);

  m.def(
      "best_level",
      [](const std::string& semiring, const std::string& mode, const std::string& store,
         const std::string& pre, const std::vector<std::string>& axioms, int bound) {
        Semiring s = Semiring::named(semiring);
        Constraint wrapped = parse_constraint("[" + pre + "]@top", s);
        return best_level(store_from(store, s), axioms_from(axioms, s), wrapped.pre(),
                          mode_named(mode), s, bound);
      },
      py::arg("semiring"), py::arg("mode"), py::arg("store"), py::arg("pre"),
      py::arg("axioms") = std::vector<std::string>{}, py::arg("bound") = 3,
      "largest level at which the store entails the pre-constraint");

  m.def(
      "prove",
      [](const std::string& sequent, const std::string& semiring, const std::string& mode,
         int depth, int copy_budget) {
        Semiring s = Semiring::named(semiring);
        Signature sig(s);
        SearchLimits limits;
        limits.depth = depth;
        limits.copy_budget = copy_budget;
        ProveResult r = prove(parse_sequent(sequent, s), sig, mode_named(mode), limits);
        py::dict out;
        out["proved"] = r.proof.has_value();
        out["truncated"] = r.truncated;
        out["proof"] = r.proof ? json_to_py(proof_json(*r.proof)) : py::object(py::none());
        return out;
      },
      py::arg("sequent"), py::arg("semiring"), py::arg("mode") = "sell", py::arg("depth") = 14,
      py::arg("copy_budget") = 2,
      "bounded backward proof search; sequent syntax 'F, F |- G'");

  m.def(
      "check_laws",
      [](const std::string& semiring, int samples, std::uint64_t seed) {
        return json_to_py(law_report_json(run_law_suite(Semiring::named(semiring), samples, seed)));
      },
      py::arg("semiring"), py::arg("samples") = 1000, py::arg("seed") = 0xC0FFEE);

  m.def(
      "run_differential",
      [](const std::string& semiring, const std::string& mode, int instances,
         std::uint64_t seed) {
        DifferentialReport r =
            run_differential(Semiring::named(semiring), mode_named(mode), instances, seed);
        py::dict out;
        out["total"] = r.total;
        out["agreements"] = r.agreements;
        out["disagreements"] = r.disagreements;
        out["truncated_excluded"] = r.truncated_excluded;
        out["failures"] = r.failures;
        return out;
      },
      py::arg("semiring"), py::arg("mode"), py::arg("instances") = 100, py::arg("seed") = 7,
      "random store-vs-prover agreement check");
}
