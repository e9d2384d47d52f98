#include "plumpwork/logic.hpp"

namespace plumpwork {

namespace {

FormulaPtr atom(Formula::Kind k, Term a, Term b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr connective(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->f = std::move(a);
  f->g = std::move(b);
  return f;
}

FormulaPtr quantifier(Formula::Kind k, std::string var, Term bound,
                      FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->var = std::move(var);
  f->bound = std::move(bound);
  f->body = std::move(body);
  return f;
}

}  // namespace

FormulaPtr f_false() {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::False;
  return f;
}
FormulaPtr f_eq(Term a, Term b) {
  return atom(Formula::Kind::Eq, std::move(a), std::move(b));
}
FormulaPtr f_mem(Term a, Term b) {
  return atom(Formula::Kind::Mem, std::move(a), std::move(b));
}
FormulaPtr f_sub(Term a, Term b) {
  return atom(Formula::Kind::Sub, std::move(a), std::move(b));
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return connective(Formula::Kind::And, std::move(a), std::move(b));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return connective(Formula::Kind::Or, std::move(a), std::move(b));
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return connective(Formula::Kind::Implies, std::move(a), std::move(b));
}
FormulaPtr f_not(FormulaPtr a) { return f_implies(std::move(a), f_false()); }
FormulaPtr f_forall_in(std::string var, Term bound, FormulaPtr body) {
  return quantifier(Formula::Kind::ForallIn, std::move(var), std::move(bound),
                    std::move(body));
}
FormulaPtr f_exists_in(std::string var, Term bound, FormulaPtr body) {
  return quantifier(Formula::Kind::ExistsIn, std::move(var), std::move(bound),
                    std::move(body));
}
FormulaPtr f_forall_sub(std::string var, Term bound, FormulaPtr body) {
  return quantifier(Formula::Kind::ForallSub, std::move(var), std::move(bound),
                    std::move(body));
}
FormulaPtr f_exists_sub(std::string var, Term bound, FormulaPtr body) {
  return quantifier(Formula::Kind::ExistsSub, std::move(var), std::move(bound),
                    std::move(body));
}

NameRef Env::lookup(const std::string& var) const {
  for (auto it = binds.rbegin(); it != binds.rend(); ++it)
    if (it->first == var) return it->second;
  throw EvalError("unbound variable: " + var);
}

Env Env::with(const std::string& var, NameRef value) const {
  Env e = *this;
  e.binds.emplace_back(var, value);
  return e;
}

namespace {

NameRef resolve(Ctx& ctx, const Term& t, const Env& env) {
  NameRef n = t.is_var() ? env.lookup(t.var) : t.constant;
  if (n == nullptr) throw EvalError("term has no value");
  ctx.require_owned(n);
  return n;
}

}  // namespace

TruthValue eval(Ctx& ctx, const Formula& f, const Env& env) {
  const auto& h = ctx.algebra();
  using K = Formula::Kind;
  switch (f.kind) {
    case K::False:
      return ctx.bottom();
    case K::Eq:
      return eq_value(ctx, resolve(ctx, f.lhs, env), resolve(ctx, f.rhs, env));
    case K::Mem:
      return mem_value(ctx, resolve(ctx, f.lhs, env), resolve(ctx, f.rhs, env));
    case K::Sub:
      return subset_value(ctx, resolve(ctx, f.lhs, env),
                          resolve(ctx, f.rhs, env));
    case K::And:
      return tv_meet(eval(ctx, *f.f, env), eval(ctx, *f.g, env));
    case K::Or:
      return tv_join(eval(ctx, *f.f, env), eval(ctx, *f.g, env));
    case K::Implies:
      return tv_implies(eval(ctx, *f.f, env), eval(ctx, *f.g, env));
    case K::ForallIn: {
      NameRef t = resolve(ctx, f.bound, env);
      int acc = h.top();
      for (const auto& [a, p] : t->entries)
        acc = h.meet(acc, h.implies(p, eval(ctx, *f.body, env.with(f.var, a)).v));
      return ctx.tv(acc);
    }
    case K::ExistsIn: {
      NameRef t = resolve(ctx, f.bound, env);
      int acc = h.bottom();
      for (const auto& [a, p] : t->entries)
        acc = h.join(acc, h.meet(p, eval(ctx, *f.body, env.with(f.var, a)).v));
      return ctx.tv(acc);
    }
    case K::ForallSub: {
      NameRef t = resolve(ctx, f.bound, env);
      int acc = h.top();
      for (NameRef g : subset_names(ctx, t))
        acc = h.meet(acc, eval(ctx, *f.body, env.with(f.var, g)).v);
      return ctx.tv(acc);
    }
    case K::ExistsSub: {
      NameRef t = resolve(ctx, f.bound, env);
      int acc = h.bottom();
      for (NameRef g : subset_names(ctx, t))
        acc = h.join(acc, eval(ctx, *f.body, env.with(f.var, g)).v);
      return ctx.tv(acc);
    }
  }
  throw EvalError("unreachable formula kind");
}

TruthValue eval(Ctx& ctx, const FormulaPtr& f, const Env& env) {
  return eval(ctx, *f, env);
}

FormulaPtr relpl_formula(Term alpha, Term gamma) {
  return f_forall_in(
      "relpl_d", gamma,
      f_forall_in("relpl_e", alpha,
                  f_implies(f_sub(Term::variable("relpl_e"),
                                  Term::variable("relpl_d")),
                            f_mem(Term::variable("relpl_e"), gamma))));
}

TruthValue relpl_value(Ctx& ctx, NameRef alpha, NameRef gamma) {
  ctx.require_owned(alpha);
  ctx.require_owned(gamma);
  const auto& h = ctx.algebra();
  std::uint64_t key = (static_cast<std::uint64_t>(alpha->id) << 32) | gamma->id;
  if (ctx.memoize()) {
    auto it = ctx.relpl_memo.find(key);
    if (it != ctx.relpl_memo.end()) return ctx.tv(it->second);
  }
  int acc = h.top();
  for (const auto& [d, w] : gamma->entries) {
    int inner = h.top();
    for (const auto& [e, p] : alpha->entries) {
      int t = h.implies(subset_value(ctx, e, d).v, mem_value(ctx, e, gamma).v);
      inner = h.meet(inner, h.implies(p, t));
      if (inner == h.bottom()) break;
    }
    acc = h.meet(acc, h.implies(w, inner));
    if (acc == h.bottom()) break;
  }
  if (ctx.memoize()) ctx.relpl_memo.emplace(key, acc);
  return ctx.tv(acc);
}

std::string format_formula(const Ctx& ctx, const Formula& f) {
  using K = Formula::Kind;
  auto term = [&](const Term& t) {
    return t.is_var() ? t.var : format_name(ctx, t.constant);
  };
  switch (f.kind) {
    case K::False:
      return std::string("false");
    case K::Eq:
      return "eq(" + term(f.lhs) + "," + term(f.rhs) + ")";
    case K::Mem:
      return "mem(" + term(f.lhs) + "," + term(f.rhs) + ")";
    case K::Sub:
      return "sub(" + term(f.lhs) + "," + term(f.rhs) + ")";
    case K::And:
      return "and(" + format_formula(ctx, *f.f) + "," +
             format_formula(ctx, *f.g) + ")";
    case K::Or:
      return "or(" + format_formula(ctx, *f.f) + "," +
             format_formula(ctx, *f.g) + ")";
    case K::Implies:
      return "imp(" + format_formula(ctx, *f.f) + "," +
             format_formula(ctx, *f.g) + ")";
    case K::ForallIn:
      return "all " + f.var + " in " + term(f.bound) + " . " +
             format_formula(ctx, *f.body);
    case K::ExistsIn:
      return "ex " + f.var + " in " + term(f.bound) + " . " +
             format_formula(ctx, *f.body);
    case K::ForallSub:
      return "all " + f.var + " sub " + term(f.bound) + " . " +
             format_formula(ctx, *f.body);
    case K::ExistsSub:
      return "ex " + f.var + " sub " + term(f.bound) + " . " +
             format_formula(ctx, *f.body);
  }
  return "?";
}

}  // namespace plumpwork
