#pragma once

#include <string>
#include <vector>

#include "plumpwork/budget.hpp"
#include "plumpwork/coding.hpp"
#include "plumpwork/names.hpp"

namespace plumpwork {

struct SuiteInstance {
  std::string key;      // canonical instance description
  std::string detail;   // expected relation and computed values
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string algebra;
  BudgetConfig budget;
  std::vector<SuiteInstance> instances;
  int passed = 0;
  int failed = 0;
  bool budget_exceeded = false;
  std::string budget_message;
  double wall_seconds = 0.0;  // human output only, never serialized

  bool ok() const { return failed == 0 && !budget_exceeded; }
};

struct SuiteInfo {
  std::string id;
  std::string description;
  std::vector<std::string> algebras;  // applicable algebras; "-" = independent
};

const std::vector<SuiteInfo>& suite_registry();
bool suite_exists(const std::string& suite_id);

// Deterministic: byte-identical reports for identical inputs and budgets.
SuiteReport run_suite(const std::string& suite_id, const std::string& algebra_id,
                      const BudgetConfig& budget);

std::string report_json(const SuiteReport& r);   // machine output, no wall time
std::string report_table(const SuiteReport& r);  // human output

// Shared generators, exposed for the test suites.

// All canonical names of rank <= max_rank (full enumeration; practical for
// rank <= 2 on the built-in algebras).
std::vector<NameRef> all_names_up_to_rank(Ctx& ctx, int max_rank);

// Rank <= 2 names that are ordinals at top, plus their thin and plump
// successors (rank <= 3), deduplicated and sorted.
std::vector<NameRef> ordinal_sweep(Ctx& ctx);

// ordinal_sweep filtered to plord = top.
std::vector<NameRef> plump_sweep(Ctx& ctx);

// Plump names reachable from the empty name by at most `depth` applications
// of plump successor, pairwise union and plump addition; constructions that
// exceed the budget are skipped.
std::vector<NameRef> arith_sweep(Ctx& ctx, int depth, std::size_t cap);

// Pairwise-incomparable finite maps (at top) with at most two keys, sourced
// from plump_sweep; includes the empty and singleton maps.
std::vector<FiniteMap> incomparable_map_sweep(Ctx& ctx, std::size_t cap);

}  // namespace plumpwork
