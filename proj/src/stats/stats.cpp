#include "minuscule/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minuscule/error.hpp"
#include "minuscule/families.hpp"
#include "minuscule/sturm.hpp"

namespace minuscule::stats {

namespace {

void require_n(long n, long min, const char* what) {
  if (n < min) throw DomainError(std::string(what) + ": n must be at least " + std::to_string(min));
}

// r / (1 + r)^2 over r in [a, b] with a >= 0; the maximum 1/4 sits at r = 1.
RatInterval spread_range(const Rat& a, const Rat& b) {
  auto phi = [](const Rat& r) { return Rat(r / ((1 + r) * (1 + r))); };
  if (b <= 1) return {phi(a), phi(b)};
  if (a >= 1) return {phi(b), phi(a)};
  return {std::min(phi(a), phi(b)), Rat(1, 4)};
}

}  // namespace

Rat expected_variance(long n) {
  require_n(n, 2, "expected_variance");
  return make_rat(Int(n * n - n - 2), Int(8 * (n - 1)));
}

CoeffStats coeff_stats(long n) {
  require_n(n, 2, "coeff_stats");
  const Poly p = families::minuscule_sum(n);
  CoeffStats s;
  s.n = n;
  s.total = evaluate(p, Rat(1));
  Rat first = 0, second = 0;
  for (long k = 0; k <= n; ++k) {
    s.probs.push_back(p[static_cast<std::size_t>(k)] / s.total);
    first += k * s.probs.back();
    second += Rat(k * k) * s.probs.back();
  }
  s.mean = first;
  s.variance = second - first * first;
  if (s.mean != make_rat(n, 2) || s.variance != expected_variance(n))
    throw InternalError("coeff_stats: n = " + std::to_string(n) + " gives mean " + to_string(s.mean) +
                        " and variance " + to_string(s.variance) + ", expected " + to_string(make_rat(n, 2)) +
                        " and " + to_string(expected_variance(n)));
  return s;
}

RootSums roots_stats(long n, long log2_width) {
  require_n(n, 2, "roots_stats");
  const Poly p = families::minuscule_sum(n);
  RootIsolator iso(p);
  const auto factors = square_free_decomposition(p);
  RootSums out{n, log2_width, {0, 0}, {0, 0}};
  const Rat target = pow2_rat(log2_width);
  for (std::size_t i = 0; i < iso.roots().size(); ++i) {
    if (!iso.refine(i, log2_width)) {
      const auto& iv = iso.roots()[i];
      throw BudgetError("roots_stats: root " + std::to_string(i) + " of N_" + std::to_string(n) +
                        " only reached width " + to_string(iv.width()) + ", wanted " + to_string(target));
    }
    const auto& iv = iso.roots()[i];
    // Multiplicity: index of the square-free factor that vanishes in the interval.
    int mult = 0;
    for (std::size_t j = 0; j < factors.size() && mult == 0; ++j) {
      const ZPoly z = zpoly::from_poly(factors[j]);
      const int slo = zpoly::sign_at_dyadic(z, iv.lo.mantissa(), iv.lo.exponent());
      const int shi = zpoly::sign_at_dyadic(z, iv.hi.mantissa(), iv.hi.exponent());
      if (iv.exact() ? slo == 0 : slo != shi) mult = static_cast<int>(j) + 1;
    }
    if (mult == 0) throw InternalError("roots_stats: could not assign a multiplicity");
    // Root x in [lo, hi] with x <= 0, so r = -x lies in [-hi, -lo].
    const Rat r_lo = -iv.hi.to_rat();
    const Rat r_hi = -iv.lo.to_rat();
    if (r_lo < 0) throw InternalError("roots_stats: positive root of N_" + std::to_string(n));
    const RatInterval spread = spread_range(r_lo, r_hi);
    out.mean.lo += mult * Rat(1 / (1 + r_hi));
    out.mean.hi += mult * Rat(1 / (1 + r_lo));
    out.variance.lo += mult * spread.lo;
    out.variance.hi += mult * spread.hi;
  }
  return out;
}

double kolmogorov_distance(long n) {
  require_n(n, 3, "kolmogorov_distance");
  const CoeffStats s = coeff_stats(n);
  const double mu = s.mean.get_d();
  const double sigma = std::sqrt(s.variance.get_d());
  double worst = 0;
  Rat cdf = 0;
  for (long k = 0; k <= n; ++k) {
    const double before = cdf.get_d();
    cdf += s.probs[static_cast<std::size_t>(k)];
    const double phi = 0.5 * std::erfc(-((k - mu) / sigma) / std::sqrt(2.0));
    worst = std::max({worst, std::fabs(cdf.get_d() - phi), std::fabs(before - phi)});
  }
  return worst;
}

Certificate second_derivative_identity(long n) {
  require_n(n, 2, "second_derivative_identity");
  const Poly second = derivative(derivative(compose_x2(families::minuscule_sum(n))));
  const Rat value = evaluate(second, Rat(1));
  const Rat expected = Rat(Int(2 * n * n * n - 3 * n * n + n - 2) * pow2(static_cast<unsigned long>(2 * n - 4)));
  Certificate cert{"second_derivative_identity", "N_" + std::to_string(n), value == expected};
  cert.params = {{"n", n}};
  cert.witness = {{"value", to_string(value)}, {"expected", to_string(expected)}};
  return cert;
}

}  // namespace minuscule::stats
