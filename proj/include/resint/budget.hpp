#ifndef RESINT_BUDGET_HPP
#define RESINT_BUDGET_HPP

#include <cstdint>

namespace resint {

/// Resource limits for Gröbner computations. max_degree bounds the polynomial
/// degree (module twists excluded) of any S-pair; max_pairs bounds the number
/// of S-pairs reduced by a single basis computation.
struct Budget {
  int max_degree = 64;
  std::int64_t max_pairs = 2'000'000;
};

/// Budget in effect on the current thread.
const Budget& current_budget();

/// Installs a budget for the lifetime of the scope (per thread).
class ScopedBudget {
public:
  explicit ScopedBudget(const Budget& b);
  ~ScopedBudget();
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

private:
  Budget saved_;
};

}  // namespace resint

#endif
