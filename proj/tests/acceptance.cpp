// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. Everything runs against a pinned budget so the sweep sizes (and
// therefore the reports) are reproducible across machines.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "plumpwork/arith.hpp"
#include "plumpwork/plump.hpp"
#include "plumpwork/suites.hpp"

using namespace plumpwork;

namespace {

BudgetConfig pinned_budget() {
  BudgetConfig b;
  b.max_rank = 64;
  b.max_entries = 16384;
  b.max_subset_names = 32768;
  b.max_instances = 200000;
  return b;
}

struct Harness {
  int failures = 0;

  void criterion(const std::string& id, double limit_seconds,
                 const std::string& what, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (secs > limit_seconds) {
      ok = false;
      error = "exceeded the " + std::to_string(limit_seconds) + "s limit";
    }
    if (!ok) ++failures;
    std::printf("%-4s %s (%.2fs): %s%s%s\n", id.c_str(),
                ok ? "pass" : "FAIL", secs, what.c_str(),
                error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
  }
};

bool run_ok(const std::string& suite, const std::string& algebra) {
  SuiteReport r = run_suite(suite, algebra, pinned_budget());
  if (!r.ok()) {
    for (const SuiteInstance& i : r.instances)
      if (!i.pass)
        std::printf("     failed: %s/%s [%s]\n", suite.c_str(),
                    i.key.c_str(), i.detail.c_str());
    if (r.budget_exceeded)
      std::printf("     budget: %s\n", r.budget_message.c_str());
  }
  return r.ok();
}

bool run_all(const std::string& suite, const std::vector<std::string>& algs) {
  bool ok = true;
  for (const std::string& a : algs) ok = run_ok(suite, a) && ok;
  return ok;
}

}  // namespace

int main() {
  Harness h;
  const std::vector<std::string> all{"bool2", "sierpinski", "chain4",
                                     "diamond"};
  const std::vector<std::string> core{"bool2", "sierpinski", "diamond"};
  const std::vector<std::string> two{"bool2", "sierpinski"};

  h.criterion("AC1", 10, "Heyting laws for builtins and all posets on <= 4", [&] {
    return run_all("heyting-laws", all) && run_ok("heyting-poset-sweep", "-");
  });

  h.criterion("AC2", 60, "names equality/Leibniz/normalize at rank <= 2", [&] {
    return run_all("names-equality", two) && run_all("names-normalize", two) &&
           run_all("names-subset-complete", two);
  });

  h.criterion("AC3", 60, "subset-quantifier soundness cross-check", [&] {
    return run_all("logic-subsetq-soundness", two);
  });

  h.criterion("AC4", 300, "plord matrix/criterion/theta triple agreement", [&] {
    return run_all("plord-triple-agreement", core);
  });

  h.criterion("AC5", 60, "classical degeneration over bool2", [&] {
    return run_ok("classical-degeneration", "bool2");
  });

  h.criterion("AC6", 10, "intuitionistic separation with the pinned constant",
              [&] {
                // Regression constant: [[pls(1) = 2]] = u over sierpinski.
                Ctx ctx(HeytingAlgebra::builtin("sierpinski"),
                        pinned_budget());
                NameRef p1 = plump_successor(ctx, ordinal_name(ctx, 1));
                NameRef two_name = ordinal_name(ctx, 2);
                TruthValue v = eq_value(ctx, p1, two_name);
                bool pinned = v.v == *ctx.algebra().index_of("u");
                bool collapse =
                    eq_value(ctx, plump_op(ctx, two_name), plump_op(ctx, p1))
                        .is_top();
                return pinned && collapse &&
                       run_ok("intuitionistic-separation", "sierpinski");
              });

  h.criterion("AC7", 300, "plump ordinal lemma suites at top", [&] {
    return run_all("plump-lemmas", core) && run_all("plump-commute", core);
  });

  h.criterion("AC8", 300, "arithmetic closure, injectivity and commutation",
              [&] {
                return run_all("arith-closure", core) &&
                       run_all("arith-injectivity", core) &&
                       run_all("arith-commute", core);
              });

  h.criterion("AC9", 300, "coding round trip and powerset reconstruction", [&] {
    return run_all("coding-roundtrip", core) &&
           run_all("coding-reconstruct", core);
  });

  h.criterion("AC10", 120, "thin check names and the plump subset retract", [&] {
    return run_all("thin-check", all) && run_all("thin-retract", core);
  });

  h.criterion("AC11", 900, "byte-identical JSON reports on repeated runs", [&] {
    bool ok = true;
    for (const SuiteInfo& info : suite_registry())
      for (const std::string& a : info.algebras) {
        std::string first = report_json(run_suite(info.id, a, pinned_budget()));
        std::string second =
            report_json(run_suite(info.id, a, pinned_budget()));
        if (first != second) {
          std::printf("     nondeterministic: %s @ %s\n", info.id.c_str(),
                      a.c_str());
          ok = false;
        }
      }
    // Spot check through the real CLI as well.
    std::string budget_file = "acceptance_budget.json";
    {
      std::ofstream out(budget_file);
      out << pinned_budget().to_json() << "\n";
    }
    std::string base = std::string("PLUMPWORK_BUDGET=") + budget_file + " \"" +
                       PLUMPWORK_CLI_PATH +
                       "\" --json suite run heyting-laws --algebra sierpinski";
    if (std::system((base + " > cli_run_a.json 2>/dev/null").c_str()) != 0)
      ok = false;
    if (std::system((base + " > cli_run_b.json 2>/dev/null").c_str()) != 0)
      ok = false;
    auto slurp = [](const std::string& path) {
      std::ifstream in(path);
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    };
    std::string a = slurp("cli_run_a.json"), b = slurp("cli_run_b.json");
    if (a.empty() || a != b) {
      std::printf("     nondeterministic or empty CLI output\n");
      ok = false;
    }
    std::remove(budget_file.c_str());
    std::remove("cli_run_a.json");
    std::remove("cli_run_b.json");
    return ok;
  });

  if (h.failures > 0) {
    std::printf("%d criteria failed\n", h.failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
