#pragma once

// Constructors for the polynomial families built on the type-A minuscule
// polynomials N_n(x), each reachable by at least two independent routes so the
// routes can be checked against one another.

#include <functional>
#include <vector>

#include "minuscule/certificate.hpp"
#include "minuscule/matrix.hpp"
#include "minuscule/poly.hpp"

namespace minuscule::families {

/// N_n(x) = 1/(4n+2) * sum_{k=1}^{n-1} k(n-k) C(2n+2, 2k+1) x^k.  n >= 1.
Poly minuscule_sum(long n);

/// The same polynomial via the binomial closed form for N_n(x^2):
/// (n+1)/8 [(1+x)^{2n} + (1-x)^{2n}] - 1/(16x) [(1+x)^{2n+2} - (1-x)^{2n+2}],
/// followed by even-part extraction.
Poly minuscule_closed(long n);
/// The closed form before extraction, i.e. N_n(x^2) as a polynomial in x.
Poly minuscule_closed_squared(long n);

/// Expands the exponential generating function of N_n(x^2) as a truncated
/// series in z and compares n! [z^n] against N_n(x^2) for n <= n_max.
Certificate minuscule_egf_check(long n_max, long z_order);

/// f_n(x) = sum_{k=0}^n C(2n+2, 2k+1) x^k.
Poly f_poly(long n);
/// f_n recovered from U_{2n+1}: x^{-(2n+1)} U_{2n+1}(x) with x^2 -> 1/(1-t).
Poly f_from_chebyshev(long n);

/// Chebyshev U_n by the three-term recurrence.
Poly chebyshev_U(long n);
/// U_n = sum_k C(n+1, 2k+1) x^{n-2k} (x^2-1)^k.
Poly chebyshev_U_sum(long n);

/// Coordinates in the basis x^k (1+x)^{n-2k}, k = 0..floor(n/2).
struct GammaVector {
  long n = 0;
  std::vector<Rat> gammas;
};
GammaVector gamma_vector(const Poly& p, long n);
Poly gamma_recompose(const GammaVector& g);

/// (sum_k gamma_{n,k}) / 2 of N_n for n = 2..n_max.
std::vector<Int> gamma_half_sums(long n_max);

/// D_n = N_n^2 - N_{n+1} N_{n-1}.  n >= 2.
Poly D_direct(long n);
/// D_n from the binomial closed form for D_{m+1}, m = n - 1.
Poly D_closed(long n);
/// Coefficient formula for D_{m+1}: returns [D_{m,0}, ..., D_{m,2m+2}] with
/// D_{m+1}(x) = (1/32) sum_k D_{m,k} x^k, where m = n - 1.
std::vector<Int> D_closed_coefficients(long n);

/// h_n(x) = sum_k x^k / ((2k+1)! (n-k)!), checked against the recurrence
/// (2n+2)(2n+3) h_{n+1} = (4n+6+x) h_n + 4x h_n'.
Poly h_poly(long n);
/// g_n(x) = sum_k C(n,k) k k!/(2k+1)! x^k, checked equal to n! x h_n'(x).
Poly g_poly(long n);
/// True iff the h recurrence holds exactly from n to n+1.
bool h_recurrence_holds(long n);

/// Lower-triangular Toeplitz truncation [a_{i-j}], size x size.
ExactMatrix toeplitz(const std::function<Rat(long)>& seq, std::size_t size);
ExactMatrix toeplitz(const std::vector<Rat>& seq, std::size_t size);

/// Coefficient of x^k in N_n; zero outside 1 <= k <= n-1.
Rat coeffN_entry(long n, long k);
/// (n-k)/(2n-2k+1)! for n >= k, zero otherwise.
Rat coeffT_entry(long n, long k);

/// Coefficient matrices on rows n = 2..size+1, columns k = 1..size.
/// Both are lower triangular with nonzero diagonal on this window.
ExactMatrix coeffN_matrix(std::size_t size);
ExactMatrix coeffT_matrix(std::size_t size);

/// k / (2k+1)!, the sequence whose Toeplitz matrix carries the TP claim.
Rat minuscule_T_sequence(long k);

enum class MatrixKind { Toeplitz, CoeffN, CoeffT };

/// Single entry point over the three matrix families; `seq` is only read for Toeplitz.
ExactMatrix build_matrix(MatrixKind kind, std::size_t size, const std::function<Rat(long)>& seq = {});

}  // namespace minuscule::families
