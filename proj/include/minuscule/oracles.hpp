#pragma once

// Independent brute-force and floating-point oracles. Nothing here ever
// produces a passing verdict on its own; the exact modules are authoritative.

#include <complex>
#include <vector>

#include "minuscule/poly.hpp"
#include "minuscule/rational.hpp"

namespace minuscule::oracles {

/// sum over (X, Y) in 2^[n] x 2^[n] of a^|X\Y| b^|Y\X| c^|X∩Y| d^|complement of X∪Y|.
/// Exhaustive over 4^n pairs; n <= 14.
Rat powerset_refined_gf(long n, const Rat& a, const Rat& b, const Rat& c, const Rat& d);
/// Serial reference for the same enumeration.
Rat powerset_refined_gf_reference(long n, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// S(n) = sum over pairs of |X Δ Y|, by enumeration; n <= 12.
Int symmetric_difference_sum(long n);
/// sum over pairs of z^|X Δ Y| as a polynomial in z, by enumeration; n <= 12.
Poly symmetric_difference_gf(long n);

struct NumericRoots {
  /// Roots at the origin come first and are exact.
  std::vector<std::complex<long double>> roots;
  std::size_t origin_roots = 0;
  bool converged = false;
  /// Largest relative backward error |p(z)| / sum |a_i| |z|^i.
  long double max_residual = 0;
};

/// All roots of p (deg >= 1) by Aberth iteration with Newton polishing.
/// Roots at the origin are split off exactly before iterating.
NumericRoots numeric_roots(const Poly& p, double tol = 1e-12);

/// Largest real part among the numeric roots, optionally skipping the exact origin roots.
/// Throws DomainError when nothing is left to maximize over.
long double max_real_part(const NumericRoots& r, bool skip_origin = false);

/// 2^n prod_k (x - cos(k pi/(n+1))), the product form of U_n.
long double chebyshev_product_form(long n, long double x);

/// p evaluated in long double (coefficients rounded).
long double evaluate_numeric(const Poly& p, long double x);

}  // namespace minuscule::oracles
