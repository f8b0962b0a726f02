#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sccp/semiring.hpp"

namespace sccp {

struct LawResult {
  std::string law;
  int checked = 0;
  int failed = 0;
  bool applicable = true;  // S8/S9 only apply to idempotent instances
};

struct LawReport {
  std::string semiring;
  std::vector<LawResult> laws;
  bool all_passed() const;
};

// Draws `samples` random value triples (exact rationals, never floats) and
// checks the full c-semiring law suite: commutativity/associativity/
// idempotency of +, comm/assoc of x, units, absorbing elements,
// distributivity, monotonicity, intensivity, plus-as-lub, the order
// substitution property, and the fold_times <= glb relation.
LawReport run_law_suite(const Semiring& s, int samples, std::uint64_t seed);

// Random carrier element for property tests elsewhere.
Level random_level(const Semiring& s, std::uint64_t& state);

}  // namespace sccp
