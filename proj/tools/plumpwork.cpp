#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plumpwork/arith.hpp"
#include "plumpwork/parse.hpp"
#include "plumpwork/plump.hpp"
#include "plumpwork/suites.hpp"

namespace pw = plumpwork;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_value(const pw::Ctx& ctx, pw::TruthValue v, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["algebra"] = ctx.algebra().id();
    j["value"] = v.label();
    j["is_top"] = v.is_top();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v.label() << "\n";
  }
}

void print_name(pw::Ctx& ctx, pw::NameRef n, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["algebra"] = ctx.algebra().id();
    j["name"] = pw::format_name(ctx, n);
    j["rank"] = n->rank;
    j["entries"] = n->entries.size();
    j["plord"] = pw::plord_value(ctx, n).label();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << pw::format_name(ctx, n) << "\n";
    std::cout << "plord: " << pw::plord_value(ctx, n).label() << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for finite Heyting-valued set models"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");
  // Parent-level flags (--json, --algebra) may be written after the leaf
  // subcommand; let unmatched options bubble up.
  app.fallthrough();

  // algebra
  auto* algebra = app.add_subcommand("algebra", "built-in algebra management");
  algebra->require_subcommand(1);
  algebra->add_subcommand("list", "list built-in algebras");
  auto* alg_check =
      algebra->add_subcommand("check", "run the Heyting laws on an algebra");
  std::string check_target;
  alg_check
      ->add_option("target", check_target,
                   "built-in algebra id or path to a poset JSON file")
      ->required();
  auto* alg_show = algebra->add_subcommand("show", "describe an algebra");
  std::string show_id;
  alg_show->add_option("id", show_id, "built-in algebra id")->required();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a closed formula");
  std::string eval_algebra = "bool2";
  std::string eval_formula;
  eval_cmd->add_option("--algebra", eval_algebra, "built-in algebra id");
  eval_cmd->add_option("formula", eval_formula, "formula text")->required();

  // plump
  auto* plump = app.add_subcommand("plump", "plumpness predicates/operators");
  plump->require_subcommand(1);
  std::string plump_algebra = "bool2";
  plump->add_option("--algebra", plump_algebra, "built-in algebra id");
  std::vector<std::string> plump_args;
  auto* plump_check =
      plump->add_subcommand("check", "plump-ordinal truth value of a name");
  auto* plump_succ = plump->add_subcommand("succ", "plump successor");
  auto* plump_op_cmd = plump->add_subcommand("op", "plump operator");
  auto* plump_theta =
      plump->add_subcommand("theta", "theta recursion value on two names");
  std::string arg_a, arg_b;
  plump_check->add_option("name", arg_a, "name literal")->required();
  plump_succ->add_option("name", arg_a, "name literal")->required();
  plump_op_cmd->add_option("name", arg_a, "name literal")->required();
  plump_theta->add_option("a", arg_a, "name literal")->required();
  plump_theta->add_option("b", arg_b, "name literal")->required();

  // arith
  auto* arith = app.add_subcommand("arith", "plump ordinal arithmetic");
  arith->require_subcommand(1);
  std::string arith_algebra = "bool2";
  arith->add_option("--algebra", arith_algebra, "built-in algebra id");
  std::string arith_a, arith_b;
  for (const char* op : {"add", "mul", "pow"}) {
    auto* sub = arith->add_subcommand(op, std::string("plump ") + op);
    sub->add_option("a", arith_a, "name literal")->required();
    sub->add_option("b", arith_b, "name literal")->required();
  }

  // code
  auto* code = app.add_subcommand("code", "incomparable-map coding");
  code->require_subcommand(1);
  std::string code_algebra = "bool2";
  code->add_option("--algebra", code_algebra, "built-in algebra id");
  auto* code_encode = code->add_subcommand("encode", "encode a finite map");
  std::string map_file, alpha_text, beta_text, sigma_text;
  code_encode->add_option("map-file", map_file,
                          "JSON list of [key,value] name-literal pairs")
      ->required();
  code_encode->add_option("alpha", alpha_text, "key bound")->required();
  code_encode->add_option("beta", beta_text, "value bound")->required();
  auto* code_decode = code->add_subcommand("decode", "decode a coded map");
  code_decode->add_option("sigma", sigma_text, "coded name")->required();
  code_decode->add_option("alpha", alpha_text, "key bound")->required();
  code_decode->add_option("beta", beta_text, "value bound")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "theorem suites");
  suite->require_subcommand(1);
  suite->add_subcommand("list", "list suites");
  auto* suite_run = suite->add_subcommand("run", "run suites");
  std::string suite_id = "all";
  std::string suite_algebra;
  suite_run->add_option("suite", suite_id, "suite id or 'all'");
  suite_run->add_option("--algebra", suite_algebra,
                        "restrict to one built-in algebra");

  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    s->fallthrough();
    for (CLI::App* t : s->get_subcommands([](const CLI::App*) { return true; }))
      t->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  pw::BudgetConfig budget = pw::BudgetConfig::from_env();

  if (algebra->parsed()) {
    if (algebra->get_subcommand("list")->parsed()) {
      if (json) {
        nlohmann::ordered_json j = pw::HeytingAlgebra::builtin_ids();
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& id : pw::HeytingAlgebra::builtin_ids())
          std::cout << id << "\n";
      }
      return kExitOk;
    }
    if (alg_check->parsed()) {
      std::vector<std::string> violations;
      std::string label = check_target;
      bool is_builtin = false;
      for (const auto& id : pw::HeytingAlgebra::builtin_ids())
        is_builtin = is_builtin || id == check_target;
      if (is_builtin) {
        violations = pw::HeytingAlgebra::builtin(check_target).check_laws();
      } else {
        pw::Poset p = pw::poset_from_json(read_file(check_target));
        violations = pw::HeytingAlgebra::downset_algebra(p).check_laws();
      }
      if (json) {
        nlohmann::ordered_json j;
        j["target"] = label;
        j["violations"] = violations;
        j["ok"] = violations.empty();
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& v : violations) std::cout << v << "\n";
        std::cout << (violations.empty() ? "ok" : "FAILED") << "\n";
      }
      return violations.empty() ? kExitOk : kExitSuiteFailure;
    }
    if (alg_show->parsed()) {
      std::cout << pw::HeytingAlgebra::builtin(show_id).describe();
      return kExitOk;
    }
  }

  if (eval_cmd->parsed()) {
    pw::Ctx ctx(pw::HeytingAlgebra::builtin(eval_algebra), budget);
    pw::TruthValue v = pw::eval(ctx, pw::parse_formula(ctx, eval_formula));
    print_value(ctx, v, json);
    return kExitOk;
  }

  if (plump->parsed()) {
    pw::Ctx ctx(pw::HeytingAlgebra::builtin(plump_algebra), budget);
    if (plump_check->parsed()) {
      print_value(ctx, pw::plord_value(ctx, pw::parse_name(ctx, arg_a)), json);
    } else if (plump_succ->parsed()) {
      print_name(ctx, pw::plump_successor(ctx, pw::parse_name(ctx, arg_a)),
                 json);
    } else if (plump_op_cmd->parsed()) {
      print_name(ctx, pw::plump_op(ctx, pw::parse_name(ctx, arg_a)), json);
    } else {
      print_value(ctx,
                  pw::vartheta(ctx, pw::parse_name(ctx, arg_a),
                               pw::parse_name(ctx, arg_b)),
                  json);
    }
    return kExitOk;
  }

  if (arith->parsed()) {
    pw::Ctx ctx(pw::HeytingAlgebra::builtin(arith_algebra), budget);
    pw::NameRef a = pw::parse_name(ctx, arith_a);
    pw::NameRef b = pw::parse_name(ctx, arith_b);
    pw::NameRef out;
    if (arith->get_subcommand("add")->parsed())
      out = pw::pl_add(ctx, a, b);
    else if (arith->get_subcommand("mul")->parsed())
      out = pw::pl_mul(ctx, a, b);
    else
      out = pw::pl_pow(ctx, a, b);
    print_name(ctx, out, json);
    return kExitOk;
  }

  if (code->parsed()) {
    pw::Ctx ctx(pw::HeytingAlgebra::builtin(code_algebra), budget);
    pw::NameRef alpha = pw::parse_name(ctx, alpha_text);
    pw::NameRef beta = pw::parse_name(ctx, beta_text);
    if (code_encode->parsed()) {
      pw::FiniteMap f = pw::parse_finite_map(ctx, read_file(map_file));
      print_name(ctx, pw::encode(ctx, f, alpha, beta), json);
    } else {
      pw::NameRef sigma = pw::parse_name(ctx, sigma_text);
      pw::FiniteMap f = pw::decode(ctx, sigma, alpha, beta);
      if (json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [k, v] : f.pairs)
          arr.push_back({pw::format_name(ctx, k), pw::format_name(ctx, v)});
        nlohmann::ordered_json j;
        j["algebra"] = ctx.algebra().id();
        j["pairs"] = arr;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [k, v] : f.pairs)
          std::cout << pw::format_name(ctx, k) << " -> "
                    << pw::format_name(ctx, v) << "\n";
      }
    }
    return kExitOk;
  }

  if (suite->parsed()) {
    if (suite->get_subcommand("list")->parsed()) {
      if (json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& info : pw::suite_registry())
          arr.push_back({{"id", info.id},
                         {"description", info.description},
                         {"algebras", info.algebras}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& info : pw::suite_registry()) {
          std::string algs;
          for (const auto& a : info.algebras)
            algs += (algs.empty() ? "" : ",") + a;
          std::cout << info.id << "  [" << algs << "]  " << info.description
                    << "\n";
        }
      }
      return kExitOk;
    }
    bool any_failed = false;
    bool any_budget = false;
    for (const auto& info : pw::suite_registry()) {
      if (suite_id != "all" && info.id != suite_id) continue;
      std::vector<std::string> algebras = info.algebras;
      if (algebras == std::vector<std::string>{"-"}) algebras = {"bool2"};
      for (const auto& alg : algebras) {
        if (!suite_algebra.empty() && info.algebras.front() != "-" &&
            alg != suite_algebra)
          continue;
        pw::SuiteReport r = pw::run_suite(info.id, alg, budget);
        std::cout << (json ? pw::report_json(r) : pw::report_table(r));
        any_failed = any_failed || r.failed > 0;
        any_budget = any_budget || r.budget_exceeded;
        if (info.algebras.front() == "-") break;
      }
    }
    if (suite_id != "all" && !pw::suite_exists(suite_id)) {
      std::cerr << "unknown suite: " << suite_id << "\n";
      return kExitUsage;
    }
    if (any_budget) return kExitBudget;
    return any_failed ? kExitSuiteFailure : kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pw::BudgetError& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const pw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitSuiteFailure;
  }
}
