#pragma once

#include <optional>
#include <span>

#include "minuscule/certificate.hpp"
#include "minuscule/poly.hpp"
#include "minuscule/sturm.hpp"

namespace minuscule::certify {

/// Which side of the origin the roots are additionally required to lie on.
enum class RootSide { Any, NonPositive };

SturmChain sturm_chain(const Poly& p);
/// Distinct real roots in (a, b].
int count_roots_in(const SturmChain& chain, const Endpoint& a, const Endpoint& b);

/// Passes iff the square-free part has as many distinct real roots as its degree.
/// The zero polynomial passes vacuously with witness flag "zero_polynomial".
Certificate certify_real_rooted(const Poly& p, RootSide side = RootSide::Any);

/// g ⪯ f in the weak sense: g interlaces f (deg f = deg g + 1) or g alternates
/// left of f (equal degrees), roots counted with multiplicity, equalities allowed.
/// Throws DomainError when either input is zero or not real-rooted.
Certificate certify_interlacing(const Poly& g, const Poly& f);

/// Nonnegativity, palindromicity, unimodality and log-concavity of the
/// coefficient sequence. Palindromicity is taken about the centre of the
/// support window unless `center_sum` (the n in f_k = f_{n-k}) is given.
Certificate certify_coeff_properties(const Poly& p, std::optional<long> center_sum = std::nullopt);

/// Gamma vector nonnegative and integral. Throws DomainError for non-palindromic input.
Certificate certify_gamma_positive(const Poly& p, long n);

struct HurwitzOptions {
  /// Run the floating-point root oracle on instances up to this degree.
  long cross_check_max_degree = 80;
  /// Real-part slack granted to the numeric oracle before it counts as a disagreement.
  double oracle_tolerance = 1e-6;
};

/// All roots in the closed left half-plane (the zero polynomial passes).
/// Exact Hermite–Biehler test on the even/odd split, cross-checked numerically.
/// Throws InternalError when the exact verdict and the numeric oracle disagree.
Certificate certify_weak_hurwitz(const Poly& f, const HurwitzOptions& options = {});

/// sum_k C(n,k) weights[k] x^k real-rooted with all roots of one weak sign.
Certificate check_multiplier_nseq(std::span<const Rat> weights, long n);

}  // namespace minuscule::certify
