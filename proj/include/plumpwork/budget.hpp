#pragma once

#include <stdexcept>
#include <string>

namespace plumpwork {

// Enumeration limits for name construction and subset sweeps. Exceeding a
// limit raises BudgetError; nothing is truncated silently.
struct BudgetConfig {
  int max_rank = 4;
  int max_entries = 64;
  int max_subset_names = 4096;
  int max_instances = 200000;

  std::string to_json() const;
  static BudgetConfig from_json(const std::string& text);
  // Loads from the file named by PLUMPWORK_BUDGET, or defaults if unset.
  static BudgetConfig from_env();
};

class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string bound, long limit, long attempted)
      : std::runtime_error("budget exceeded: " + bound + " limit " +
                           std::to_string(limit) + ", needed " +
                           std::to_string(attempted)),
        bound_(std::move(bound)),
        limit_(limit),
        attempted_(attempted) {}

  const std::string& bound() const { return bound_; }
  long limit() const { return limit_; }
  long attempted() const { return attempted_; }

 private:
  std::string bound_;
  long limit_;
  long attempted_;
};

}  // namespace plumpwork
