#ifndef CHROMCON_BUDGET_HPP
#define CHROMCON_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chromcon {

/// Thrown when an exact search runs out of its node/candidate budget.
/// Callers that need a tri-state answer catch this and report
/// "indeterminate" instead of a boolean; it is never converted to false.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Node budget for the exact coloring searches.
struct SolveBudget {
  std::int64_t max_nodes = 50'000'000;
};

/// Candidate budget for template enumeration (inextensibility certification).
struct EnumerationBudget {
  std::int64_t max_templates = 2'000'000;
  SolveBudget solver;
};

/// Subset budget for induced-subgraph searches.
struct SubgraphBudget {
  std::int64_t max_subsets = 1'000'000;
  SolveBudget solver;
};

}  // namespace chromcon

#endif
