#include "plumpwork/parse.hpp"

#include <cctype>
#include <string>

#include "json.hpp"

namespace plumpwork {

namespace {

class Cursor {
 public:
  Cursor(Ctx& ctx, const std::string& text) : ctx_(ctx), text_(text) {}

  Ctx& ctx() { return ctx_; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    if (done() || text_[pos_] != c) return false;
    advance();
    return true;
  }

  // Identifier / keyword / truth-value label: [A-Za-z0-9_.]+
  std::string word() {
    skip_ws();
    std::string w;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')
        w += c, advance();
      else
        break;
    }
    if (w.empty()) fail("expected an identifier");
    return w;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Ctx& ctx_;
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

NameRef parse_name_at(Cursor& c) {
  if (c.peek() == '{') {
    c.expect('{');
    std::vector<std::pair<NameRef, int>> entries;
    if (!c.accept('}')) {
      do {
        c.expect('(');
        NameRef child = parse_name_at(c);
        c.expect(',');
        std::string label = c.word();
        auto w = c.ctx().algebra().index_of(label);
        if (!w)
          c.fail("unknown truth-value label '" + label + "' for algebra " +
                 c.ctx().algebra().id());
        c.expect(')');
        entries.emplace_back(child, *w);
      } while (c.accept(','));
      c.expect('}');
    }
    return c.ctx().make_name(std::move(entries));
  }
  std::string w = c.word();
  if (w == "ord") {
    c.expect(':');
    std::string digits = c.word();
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != digits.size() || k < 0)
      c.fail("expected a nonnegative integer after 'ord:'");
    return ordinal_name(c.ctx(), k);
  }
  c.fail("expected a name literal ({}, {(N,w),...} or ord:k)");
}

bool name_start(char ch) { return ch == '{' || ch == 'o'; }

Term parse_term(Cursor& c) {
  char ch = c.peek();
  if (ch == '{') return Term::name(parse_name_at(c));
  std::string w = c.word();
  if (w == "ord") {
    c.expect(':');
    std::string digits = c.word();
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != digits.size() || k < 0)
      c.fail("expected a nonnegative integer after 'ord:'");
    return Term::name(ordinal_name(c.ctx(), k));
  }
  return Term::variable(w);
}

FormulaPtr parse_formula_at(Cursor& c) {
  if (c.peek() == '{') c.fail("expected a formula, found a name literal");
  std::string head = c.word();

  auto binary_terms = [&](FormulaPtr (*make)(Term, Term)) {
    c.expect('(');
    Term a = parse_term(c);
    c.expect(',');
    Term b = parse_term(c);
    c.expect(')');
    return make(std::move(a), std::move(b));
  };
  auto binary_formulas = [&](FormulaPtr (*make)(FormulaPtr, FormulaPtr)) {
    c.expect('(');
    FormulaPtr a = parse_formula_at(c);
    c.expect(',');
    FormulaPtr b = parse_formula_at(c);
    c.expect(')');
    return make(std::move(a), std::move(b));
  };

  if (head == "false") return f_false();
  if (head == "eq") return binary_terms(f_eq);
  if (head == "mem") return binary_terms(f_mem);
  if (head == "sub") return binary_terms(f_sub);
  if (head == "and") return binary_formulas(f_and);
  if (head == "or") return binary_formulas(f_or);
  if (head == "imp") return binary_formulas(f_implies);
  if (head == "not") {
    c.expect('(');
    FormulaPtr a = parse_formula_at(c);
    c.expect(')');
    return f_not(std::move(a));
  }
  if (head == "all" || head == "ex") {
    std::string var = c.word();
    if (var == "in" || var == "sub")
      c.fail("expected a variable after '" + head + "'");
    std::string mode = c.word();
    if (mode != "in" && mode != "sub")
      c.fail("expected 'in' or 'sub' after the bound variable");
    Term bound = parse_term(c);
    c.expect('.');
    FormulaPtr body = parse_formula_at(c);
    if (head == "all")
      return mode == "in" ? f_forall_in(var, bound, std::move(body))
                          : f_forall_sub(var, bound, std::move(body));
    return mode == "in" ? f_exists_in(var, bound, std::move(body))
                        : f_exists_sub(var, bound, std::move(body));
  }
  c.fail("unknown formula head '" + head + "'");
}

}  // namespace

NameRef parse_name(Ctx& ctx, const std::string& text) {
  Cursor c(ctx, text);
  if (c.done()) c.fail("empty name literal");
  if (!name_start(c.peek()))
    c.fail("expected a name literal ({}, {(N,w),...} or ord:k)");
  NameRef n = parse_name_at(c);
  if (!c.done()) c.fail("trailing input after the name literal");
  return n;
}

FormulaPtr parse_formula(Ctx& ctx, const std::string& text) {
  Cursor c(ctx, text);
  FormulaPtr f = parse_formula_at(c);
  if (!c.done()) c.fail("trailing input after the formula");
  return f;
}

FiniteMap parse_finite_map(Ctx& ctx, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, static_cast<int>(e.byte));
  }
  if (!j.is_array()) throw ParseError("map file must be a JSON array", 1, 1);
  std::vector<std::pair<NameRef, NameRef>> pairs;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw ParseError("each map entry must be a [key, value] pair of "
                       "name-literal strings",
                       1, 1);
    pairs.emplace_back(parse_name(ctx, entry[0].get<std::string>()),
                       parse_name(ctx, entry[1].get<std::string>()));
  }
  return FiniteMap::from_pairs(ctx, std::move(pairs));
}

}  // namespace plumpwork
