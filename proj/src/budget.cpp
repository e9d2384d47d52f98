#include "plumpwork/budget.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace plumpwork {

std::string BudgetConfig::to_json() const {
  nlohmann::ordered_json j;
  j["max_rank"] = max_rank;
  j["max_entries"] = max_entries;
  j["max_subset_names"] = max_subset_names;
  j["max_instances"] = max_instances;
  return j.dump();
}

BudgetConfig BudgetConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BudgetConfig b;
  b.max_rank = j.value("max_rank", b.max_rank);
  b.max_entries = j.value("max_entries", b.max_entries);
  b.max_subset_names = j.value("max_subset_names", b.max_subset_names);
  b.max_instances = j.value("max_instances", b.max_instances);
  return b;
}

BudgetConfig BudgetConfig::from_env() {
  const char* path = std::getenv("PLUMPWORK_BUDGET");
  if (path == nullptr) return {};
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error(std::string("cannot open budget config ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace plumpwork
