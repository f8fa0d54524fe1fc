#pragma once

#include <cstddef>

namespace minuscule {

/// Process-wide size caps. Set once at startup (CLI config); read everywhere else.
struct Limits {
  long degree_cap = 2000;
  std::size_t matrix_size_cap = 64;
  // Upper bound on sum_k C(rows,k) * C(cols,k) for exhaustive minor enumeration.
  unsigned long long minors_budget = 5'000'000;
};

const Limits& limits();
void set_limits(const Limits& l);

/// Throws BudgetError when a constructor would produce a polynomial of degree above the cap.
void require_degree(long degree, const char* what);

}  // namespace minuscule
