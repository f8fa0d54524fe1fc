#include "minuscule/oracles.hpp"

#include <algorithm>
#include <climits>
#include <limits>

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "minuscule/error.hpp"

namespace minuscule::oracles {
namespace {

using Complex = std::complex<long double>;

constexpr long kPowersetMax = 14;
constexpr long kSymdiffMax = 12;

void check_size(long n, long cap, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be nonnegative");
  if (n > cap) throw BudgetError(std::string(what) + ": n above enumeration cap " + std::to_string(cap));
}

// hist[(i*(n+1) + j)*(n+1) + k] counts pairs with |X\Y| = i, |Y\X| = j, |X∩Y| = k.
using Histogram = std::vector<std::uint64_t>;

void accumulate_row(std::uint32_t x, long n, Histogram& hist) {
  const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
  const std::size_t m = static_cast<std::size_t>(n + 1);
  for (std::uint32_t y = 0; y <= full; ++y) {
    const auto i = static_cast<std::size_t>(std::popcount(x & ~y));
    const auto j = static_cast<std::size_t>(std::popcount(y & ~x));
    const auto k = static_cast<std::size_t>(std::popcount(x & y));
    ++hist[(i * m + j) * m + k];
    if (y == full) break;
  }
}

Rat weigh(const Histogram& hist, long n, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  const std::size_t m = static_cast<std::size_t>(n + 1);
  auto powers = [&](const Rat& base) {
    std::vector<Rat> p(m, Rat(1));
    for (std::size_t e = 1; e < m; ++e) p[e] = p[e - 1] * base;
    return p;
  };
  const auto pa = powers(a), pb = powers(b), pc = powers(c), pd = powers(d);
  Rat total = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j)
      for (std::size_t k = 0; i + j + k < m; ++k) {
        const std::uint64_t count = hist[(i * m + j) * m + k];
        if (count == 0) continue;
        Int cnt;
        mpz_import(cnt.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
        total += Rat(cnt) * pa[i] * pb[j] * pc[k] * pd[m - 1 - i - j - k];
      }
  return total;
}

// Coefficients as long double, scaled by a common power of two so the largest is near 1.
std::vector<long double> scaled_coefficients(const Poly& p) {
  std::vector<long double> mant;
  std::vector<long> expo;
  long top = LONG_MIN;
  for (const auto& c : p.coeffs()) {
    if (c == 0) {
      mant.push_back(0);
      expo.push_back(0);
      continue;
    }
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, c.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, c.get_den_mpz_t());
    mant.push_back(static_cast<long double>(mn) / static_cast<long double>(md));
    expo.push_back(en - ed);
    top = std::max(top, en - ed);
  }
  for (std::size_t i = 0; i < mant.size(); ++i)
    if (mant[i] != 0) mant[i] = std::ldexp(mant[i], static_cast<int>(std::max(expo[i] - top, -16000L)));
  return mant;
}

// p(z), p'(z) and sum |a_i| |z|^i by Horner.
void horner(const std::vector<long double>& a, Complex z, Complex& v, Complex& dv, long double& scale) {
  v = 0;
  dv = 0;
  scale = 0;
  const long double r = std::abs(z);
  for (std::size_t i = a.size(); i-- > 0;) {
    dv = dv * z + v;
    v = v * z + a[i];
    scale = scale * r + std::fabs(a[i]);
  }
}

}  // namespace

Rat powerset_refined_gf_reference(long n, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  check_size(n, kPowersetMax, "powerset_refined_gf");
  const std::size_t m = static_cast<std::size_t>(n + 1);
  Histogram hist(m * m * m, 0);
  const std::uint32_t sets = 1u << n;
  for (std::uint32_t x = 0; x < sets; ++x) accumulate_row(x, n, hist);
  return weigh(hist, n, a, b, c, d);
}

Rat powerset_refined_gf(long n, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  check_size(n, kPowersetMax, "powerset_refined_gf");
  const std::size_t m = static_cast<std::size_t>(n + 1);
  Histogram hist(m * m * m, 0);
  const long sets = 1L << n;
#pragma omp parallel
  {
    Histogram local(hist.size(), 0);
#pragma omp for schedule(static) nowait
    for (long x = 0; x < sets; ++x) accumulate_row(static_cast<std::uint32_t>(x), n, local);
#pragma omp critical
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
  }
  return weigh(hist, n, a, b, c, d);
}

Poly symmetric_difference_gf(long n) {
  check_size(n, kSymdiffMax, "symmetric_difference_gf");
  std::vector<std::uint64_t> count(static_cast<std::size_t>(n + 1), 0);
  const std::uint32_t sets = 1u << n;
  for (std::uint32_t x = 0; x < sets; ++x)
    for (std::uint32_t y = 0; y < sets; ++y) ++count[static_cast<std::size_t>(std::popcount(x ^ y))];
  std::vector<Rat> c;
  for (auto v : count) c.emplace_back(static_cast<unsigned long>(v));
  return Poly(std::move(c));
}

Int symmetric_difference_sum(long n) {
  const Poly gf = symmetric_difference_gf(n);
  Int total = 0;
  for (long k = 0; k <= gf.degree(); ++k) total += Int(k) * gf[static_cast<std::size_t>(k)].get_num();
  return total;
}

NumericRoots numeric_roots(const Poly& p, double tol) {
  if (p.degree() < 1) throw DomainError("numeric_roots: degree must be at least 1");
  NumericRoots out;
  const std::size_t zeros = p.valuation();
  out.roots.assign(zeros, Complex(0));
  out.origin_roots = zeros;
  const Poly q = shift_down(p, zeros);
  const long n = q.degree();
  out.converged = true;
  if (n == 0) return out;

  const auto a = scaled_coefficients(q);
  // Start on a circle whose radius is the geometric mean of the root moduli.
  const long double radius =
      std::pow(std::fabs(a.front() / a.back()), 1.0L / static_cast<long double>(n));
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    const long double theta = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
  }
  const long max_iter = 2000;
  const long double eps = std::numeric_limits<long double>::epsilon();
  // A root stops moving once its step is tiny or its residual is at rounding level.
  std::vector<bool> settled(z.size(), false);
  bool done = false;
  for (long iter = 0; iter < max_iter && !done; ++iter) {
    done = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (settled[k]) continue;
      Complex v, dv;
      long double scale;
      horner(a, z[k], v, dv, scale);
      if (std::abs(v) <= 16 * eps * scale) {
        settled[k] = true;
        continue;
      }
      const Complex w = v / dv;
      Complex s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      const Complex step = w / (1.0L - w * s);
      z[k] -= step;
      if (std::abs(step) <= tol * (1 + std::abs(z[k])))
        settled[k] = true;
      else
        done = false;
    }
  }
  out.converged = done;
  for (auto& r : z) {
    // One Newton step; skipped if it would move the root far (clusters).
    Complex v, dv;
    long double scale;
    horner(a, r, v, dv, scale);
    if (dv != Complex(0)) {
      const Complex step = v / dv;
      if (std::abs(step) < 1e-6L * (1 + std::abs(r))) r -= step;
    }
    horner(a, r, v, dv, scale);
    if (scale > 0) out.max_residual = std::max(out.max_residual, std::abs(v) / scale);
    out.roots.push_back(r);
  }
  return out;
}

long double max_real_part(const NumericRoots& r, bool skip_origin) {
  const std::size_t first = skip_origin ? r.origin_roots : 0;
  if (r.roots.size() <= first) throw DomainError("max_real_part: no roots");
  long double best = r.roots[first].real();
  for (std::size_t i = first; i < r.roots.size(); ++i) best = std::max(best, r.roots[i].real());
  return best;
}

long double chebyshev_product_form(long n, long double x) {
  if (n < 0) throw DomainError("chebyshev_product_form: n must be nonnegative");
  long double v = std::ldexp(1.0L, static_cast<int>(n));
  for (long k = 1; k <= n; ++k) v *= x - std::cos(static_cast<long double>(k) * std::numbers::pi_v<long double> / (n + 1));
  return v;
}

long double evaluate_numeric(const Poly& p, long double x) {
  long double v = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * x + p.coeffs()[i].get_d();
  return v;
}

}  // namespace minuscule::oracles
