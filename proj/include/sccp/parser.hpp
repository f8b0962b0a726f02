#pragma once

#include <stdexcept>
#include <string>

#include "sccp/interpreter.hpp"
#include "sccp/prover.hpp"

namespace sccp {

// Parse error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Program source:
//   semiring fuzzy; mode sell;
//   axiom [leq(X, Y)]@top => [leq(X, s(Y))]@top;
//   def p(X) = ask [c(X)]@0.3 then p(X);
//   main = tell [c]@0.7 || tell [d]@0.2 || ask [c]@0.3 then tell [q1]@1;
// Constraints: 1, [atoms]@level, c * c, ex X. c, X = t (eq sugar at top).
// Defaults when headers are omitted: semiring crisp, mode sell.
Program parse_program(const std::string& text);

// A constraint in the syntax above, against a given semiring for levels.
Constraint parse_constraint(const std::string& text, const Semiring& s);

// Prover formulas / sequents:
//   !{0.7} c, !{p} (!{0.3} c -o !{p} 1) |- !{0.5} c * top
// with connectives * & -o, quantifiers "ex X." / "all X.", units 1 / top,
// and indices level | p | d | u | botc | topc inside !{...}.
Formula parse_formula(const std::string& text, const Semiring& s);
Sequent parse_sequent(const std::string& text, const Semiring& s);

}  // namespace sccp
