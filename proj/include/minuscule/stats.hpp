#pragma once

#include <vector>

#include "minuscule/certificate.hpp"
#include "minuscule/rational.hpp"

namespace minuscule::stats {

/// Coefficient distribution of N_n normalized to a probability vector.
struct CoeffStats {
  long n = 0;
  Rat total;               // N_n(1)
  std::vector<Rat> probs;  // p(n,k) for k = 0..n
  Rat mean;
  Rat variance;
};

/// Exact statistics; throws InternalError unless mean = n/2 and
/// variance = (n^2 - n - 2) / (8(n - 1)). Requires n >= 2.
CoeffStats coeff_stats(long n);

/// (n^2 - n - 2) / (8(n - 1)).
Rat expected_variance(long n);

struct RatInterval {
  Rat lo, hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

/// Enclosures of sum 1/(1+r) and sum r/(1+r)^2 over the roots -r of N_n.
struct RootSums {
  long n = 0;
  long log2_width = 0;
  RatInterval mean;
  RatInterval variance;
};

/// Roots refined to width 2^log2_width. Throws BudgetError (with the achieved
/// width) when refinement stalls. Requires n >= 2.
RootSums roots_stats(long n, long log2_width = -40);

/// sup over jump points of |CDF_n - Phi| for the standardized coefficient distribution; n >= 3.
double kolmogorov_distance(long n);

/// (N_n(x^2))'' at x = 1 against (2n^3 - 3n^2 + n - 2) 2^(2n-4); n >= 2.
Certificate second_derivative_identity(long n);

}  // namespace minuscule::stats
