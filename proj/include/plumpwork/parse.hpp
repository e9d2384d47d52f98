#pragma once

#include <stdexcept>
#include <string>

#include "plumpwork/coding.hpp"
#include "plumpwork/logic.hpp"
#include "plumpwork/names.hpp"

namespace plumpwork {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Name literals: {} | {(N,w),...} | ord:k, weights are truth-value labels of
// the active algebra.
NameRef parse_name(Ctx& ctx, const std::string& text);

// Formulas: eq(t,u), mem(t,u), sub(t,u), and/or/imp(f,g), not(f), false,
// `all x in t . f`, `ex x in t . f`, `all x sub t . f`, `ex x sub t . f`.
FormulaPtr parse_formula(Ctx& ctx, const std::string& text);

// JSON list of [key, value] name-literal pairs.
FiniteMap parse_finite_map(Ctx& ctx, const std::string& json_text);

}  // namespace plumpwork
