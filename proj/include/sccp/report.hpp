#pragma once

#include <json.hpp>

#include "sccp/harness.hpp"
#include "sccp/laws.hpp"
#include "sccp/interpreter.hpp"
#include "sccp/prover.hpp"

namespace sccp {

// Machine-readable renderings of traces, stores, proofs and entailment
// checks; shapes documented in docs/schemas/.
nlohmann::json store_json(const Store& st);
nlohmann::json config_json(const Configuration& c);
nlohmann::json trace_json(const Trace& t);
nlohmann::json reach_json(const ReachSet& r);
nlohmann::json entail_trace_json(const EntailTrace& t);
nlohmann::json proof_json(const ProofNode& n);
nlohmann::json adequacy_json(const AdequacyResult& r);
nlohmann::json law_report_json(const LawReport& r);

}  // namespace sccp
