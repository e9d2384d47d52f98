#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumpwork/names.hpp"

namespace plumpwork {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A term is a variable or a name constant.
struct Term {
  std::string var;            // nonempty iff variable
  NameRef constant = nullptr;

  static Term variable(std::string v) { return {std::move(v), nullptr}; }
  static Term name(NameRef n) { return {{}, n}; }
  bool is_var() const { return !var.empty(); }
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Delta0 internal language plus subset-bounded quantifiers. Negation is sugar
// for (f -> false); there are no unbounded quantifiers.
struct Formula {
  enum class Kind {
    False,
    Eq,
    Mem,
    Sub,
    And,
    Or,
    Implies,
    ForallIn,
    ExistsIn,
    ForallSub,
    ExistsSub,
  };

  Kind kind;
  Term lhs, rhs;          // Eq/Mem/Sub
  FormulaPtr f, g;        // And/Or/Implies
  std::string var;        // quantifiers
  Term bound;             // quantifiers
  FormulaPtr body;        // quantifiers
};

FormulaPtr f_false();
FormulaPtr f_eq(Term a, Term b);
FormulaPtr f_mem(Term a, Term b);
FormulaPtr f_sub(Term a, Term b);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_not(FormulaPtr a);  // a -> false
FormulaPtr f_forall_in(std::string var, Term bound, FormulaPtr body);
FormulaPtr f_exists_in(std::string var, Term bound, FormulaPtr body);
FormulaPtr f_forall_sub(std::string var, Term bound, FormulaPtr body);
FormulaPtr f_exists_sub(std::string var, Term bound, FormulaPtr body);

// Variable binding for evaluation.
struct Env {
  std::vector<std::pair<std::string, NameRef>> binds;

  NameRef lookup(const std::string& var) const;
  Env with(const std::string& var, NameRef value) const;
};

TruthValue eval(Ctx& ctx, const Formula& f, const Env& env = {});
TruthValue eval(Ctx& ctx, const FormulaPtr& f, const Env& env = {});

// relpl_alpha(gamma): every member of gamma absorbs the alpha-members it
// includes.
FormulaPtr relpl_formula(Term alpha, Term gamma);
TruthValue relpl_value(Ctx& ctx, NameRef alpha, NameRef gamma);

std::string format_formula(const Ctx& ctx, const Formula& f);

}  // namespace plumpwork
