#include "minuscule/families.hpp"

#include <string>

#include "minuscule/error.hpp"
#include "minuscule/limits.hpp"

namespace minuscule::families {
namespace {

void require_index(long n, long min, const char* what) {
  if (n < min) throw DomainError(std::string(what) + ": n = " + std::to_string(n) + " < " + std::to_string(min));
}

// Truncated power series in z with polynomial coefficients in x.
using Series = std::vector<Poly>;

Series exp_series(const Poly& u, long order) {
  Series s(static_cast<std::size_t>(order + 1));
  Poly power = Poly::constant(1);
  Int fact = 1;
  for (long k = 0; k <= order; ++k) {
    if (k > 0) {
      power *= u;
      fact *= k;
    }
    s[static_cast<std::size_t>(k)] = Rat(Int(1), fact) * power;
  }
  return s;
}

// (c0 + c1 z) * s, truncated at the order of s.
Series mul_linear(const Poly& c0, const Poly& c1, const Series& s) {
  Series out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    out[k] = c0 * s[k];
    if (k > 0) out[k] += c1 * s[k - 1];
  }
  return out;
}

}  // namespace

Poly minuscule_sum(long n) {
  require_index(n, 1, "minuscule_sum");
  require_degree(n - 1, "minuscule_sum");
  std::vector<Rat> c(static_cast<std::size_t>(n));
  for (long k = 1; k <= n - 1; ++k) c[static_cast<std::size_t>(k)] = coeffN_entry(n, k);
  return Poly(std::move(c));
}

Poly minuscule_closed_squared(long n) {
  require_index(n, 1, "minuscule_closed");
  require_degree(2 * n + 2, "minuscule_closed");
  const auto m = static_cast<unsigned>(n);
  const Poly plus = Poly::binomial_power(1, 1, 2 * m);
  const Poly minus = Poly::binomial_power(1, -1, 2 * m);
  const Poly plus2 = plus * Poly{1, 2, 1};
  const Poly minus2 = minus * Poly{1, -2, 1};
  const Poly first = make_rat(n + 1, 8) * (plus + minus);
  // The odd difference always has a zero constant term; shift_down enforces it.
  const Poly second = Rat(1, 16) * shift_down(plus2 - minus2, 1);
  return first - second;
}

Poly minuscule_closed(long n) {
  const Poly sq = minuscule_closed_squared(n);
  try {
    return even_part_extract(sq);
  } catch (const DomainError& e) {
    throw InternalError(std::string("minuscule_closed: closed form not even: ") + e.what());
  }
}

Certificate minuscule_egf_check(long n_max, long z_order) {
  require_index(n_max, 0, "minuscule_egf_check");
  if (z_order < n_max) throw DomainError("minuscule_egf_check: z_order < n_max");
  Certificate cert{"egf_identity", "sum N_n(x^2) z^n/n!", false};
  cert.params = {{"n_max", n_max}, {"z_order", z_order}};

  const Poly u = Poly{1, 2, 1};   // (1+x)^2
  const Poly v = Poly{1, -2, 1};  // (1-x)^2
  const Poly one_plus_x2{1, 0, 1};
  const Series a = mul_linear(-one_plus_x2, Rat(2) * shift_up(u, 1), exp_series(u, z_order));
  const Series b = mul_linear(one_plus_x2, Rat(2) * shift_up(v, 1), exp_series(v, z_order));

  Int fact = 1;
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= n;
    const auto idx = static_cast<std::size_t>(n);
    const Poly numerator = Rat(fact) * (a[idx] + b[idx]);
    Poly lhs;
    bool ok = numerator.is_zero() || numerator.valuation() >= 1;
    if (ok) lhs = Rat(1, 16) * shift_down(numerator, 1);
    const Poly expected = n == 0 ? Poly() : compose_x2(minuscule_sum(n));
    if (!ok || lhs != expected) {
      cert.witness = {{"first_bad_n", n}, {"series_coefficient", coeff_strings(lhs)},
                      {"expected", coeff_strings(expected)}};
      return cert;
    }
  }
  cert.pass = true;
  cert.witness = {{"checked_through", n_max}};
  return cert;
}

Poly f_poly(long n) {
  require_index(n, 0, "f_poly");
  require_degree(n, "f_poly");
  std::vector<Rat> c(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = Rat(binomial(2 * n + 2, 2 * k + 1));
  return Poly(std::move(c));
}

Poly f_from_chebyshev(long n) {
  require_index(n, 0, "f_from_chebyshev");
  const Poly u = chebyshev_U(2 * n + 1);
  Poly f;
  const Poly one_minus_t{1, -1};
  for (long j = 0; j <= n; ++j) {
    const Rat& c = u[static_cast<std::size_t>(2 * j + 1)];
    f += c * pow(one_minus_t, static_cast<unsigned>(n - j));
  }
  return f;
}

Poly chebyshev_U(long n) {
  require_index(n, 0, "chebyshev_U");
  require_degree(n, "chebyshev_U");
  Poly prev = Poly::constant(1);
  if (n == 0) return prev;
  Poly cur = Poly{0, 2};
  const Poly two_x{0, 2};
  for (long k = 1; k < n; ++k) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly chebyshev_U_sum(long n) {
  require_index(n, 0, "chebyshev_U_sum");
  require_degree(n, "chebyshev_U_sum");
  Poly u;
  const Poly x2_minus_1{-1, 0, 1};
  for (long k = 0; 2 * k <= n; ++k)
    u += Rat(binomial(n + 1, 2 * k + 1)) *
         shift_up(pow(x2_minus_1, static_cast<unsigned>(k)), static_cast<std::size_t>(n - 2 * k));
  return u;
}

GammaVector gamma_vector(const Poly& p, long n) {
  require_index(n, 0, "gamma_vector");
  if (!is_palindromic(p, static_cast<std::size_t>(n)))
    throw DomainError("gamma_vector: " + to_string(p) + " is not palindromic with respect to " + std::to_string(n));
  GammaVector g{n, std::vector<Rat>(static_cast<std::size_t>(n / 2 + 1))};
  Poly rest = p;
  for (long k = 0; k <= n / 2; ++k) {
    const Rat gk = rest[static_cast<std::size_t>(k)];
    g.gammas[static_cast<std::size_t>(k)] = gk;
    if (gk != 0)
      rest -= gk * shift_up(Poly::binomial_power(1, 1, static_cast<unsigned>(n - 2 * k)), static_cast<std::size_t>(k));
  }
  if (!rest.is_zero()) throw InternalError("gamma_vector: nonzero remainder " + to_string(rest));
  return g;
}

Poly gamma_recompose(const GammaVector& g) {
  Poly p;
  for (std::size_t k = 0; k < g.gammas.size(); ++k)
    p += g.gammas[k] * shift_up(Poly::binomial_power(1, 1, static_cast<unsigned>(g.n - 2 * static_cast<long>(k))), k);
  return p;
}

std::vector<Int> gamma_half_sums(long n_max) {
  require_index(n_max, 2, "gamma_half_sums");
  std::vector<Int> out;
  for (long n = 2; n <= n_max; ++n) {
    Rat total = 0;
    for (const auto& gk : gamma_vector(minuscule_sum(n), n).gammas) total += gk;
    if (!is_integer(total) || total.get_num() % 2 != 0)
      throw InternalError("gamma_half_sums: gamma sum " + to_string(total) + " at n = " + std::to_string(n) +
                          " is not even");
    out.push_back(total.get_num() / 2);
  }
  return out;
}

Poly D_direct(long n) {
  require_index(n, 2, "D_direct");
  const Poly mid = minuscule_sum(n);
  return mid * mid - minuscule_sum(n + 1) * minuscule_sum(n - 1);
}

Poly D_closed(long n) {
  require_index(n, 2, "D_closed");
  const long m = n - 1;
  require_degree(2 * m + 2, "D_closed");
  std::vector<Rat> even(static_cast<std::size_t>(2 * m + 3));
  for (long k = 0; k <= 2 * m + 2; ++k) even[static_cast<std::size_t>(k)] = Rat(binomial(4 * m + 4, 2 * k));
  const Int mid = 8 * m * m + 16 * m + 6;
  const Poly quad{1, Rat(mid), 1};
  const Poly bracket = Poly(std::move(even)) - quad * Poly::binomial_power(1, -1, static_cast<unsigned>(2 * m));
  return Rat(1, 32) * bracket;
}

std::vector<Int> D_closed_coefficients(long n) {
  require_index(n, 2, "D_closed_coefficients");
  const long m = n - 1;
  const Int mid = 8 * m * m + 16 * m + 6;
  std::vector<Int> c(static_cast<std::size_t>(2 * m + 3));
  for (long k = 0; k <= 2 * m + 2; ++k) {
    const int s = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(k)] = binomial(4 * m + 4, 2 * k) - s * binomial(2 * m, k) -
                                     s * binomial(2 * m, k - 2) + s * mid * binomial(2 * m, k - 1);
  }
  return c;
}

namespace {

Poly h_explicit(long n) {
  std::vector<Rat> c(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(k)] =
        Rat(Int(1), factorial(static_cast<unsigned long>(2 * k + 1)) * factorial(static_cast<unsigned long>(n - k)));
  return Poly(std::move(c));
}

}  // namespace

bool h_recurrence_holds(long n) {
  require_index(n, 0, "h_recurrence_holds");
  const Poly hn = h_explicit(n);
  const Poly lhs = Rat((2 * n + 2) * (2 * n + 3)) * h_explicit(n + 1);
  const Poly rhs = Poly{Rat(4 * n + 6), 1} * hn + Poly{0, 4} * derivative(hn);
  return lhs == rhs;
}

Poly h_poly(long n) {
  require_index(n, 0, "h_poly");
  require_degree(n, "h_poly");
  if (n >= 1 && !h_recurrence_holds(n - 1))
    throw InternalError("h_poly: recurrence fails between n = " + std::to_string(n - 1) + " and " + std::to_string(n));
  return h_explicit(n);
}

Poly g_poly(long n) {
  require_index(n, 0, "g_poly");
  require_degree(n, "g_poly");
  std::vector<Rat> c(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    c[static_cast<std::size_t>(k)] = Rat(binomial(n, k) * k * factorial(uk), factorial(2 * uk + 1));
    c[static_cast<std::size_t>(k)].canonicalize();
  }
  Poly g(std::move(c));
  const Poly via_h = Rat(factorial(static_cast<unsigned long>(n))) * shift_up(derivative(h_poly(n)), 1);
  if (g != via_h) throw InternalError("g_poly: explicit sum differs from n! x h_n'(x) at n = " + std::to_string(n));
  return g;
}

ExactMatrix toeplitz(const std::function<Rat(long)>& seq, std::size_t size) {
  if (size > limits().matrix_size_cap)
    throw BudgetError("toeplitz: size " + std::to_string(size) + " exceeds matrix cap");
  ExactMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = seq(static_cast<long>(i - j));
  return m;
}

ExactMatrix toeplitz(const std::vector<Rat>& seq, std::size_t size) {
  return toeplitz([&seq](long k) { return static_cast<std::size_t>(k) < seq.size() ? seq[static_cast<std::size_t>(k)] : Rat(0); },
                  size);
}

Rat coeffN_entry(long n, long k) {
  if (n < 1 || k < 1 || k > n - 1) return 0;
  Rat r(Int(k * (n - k)) * binomial(2 * n + 2, 2 * k + 1), Int(4 * n + 2));
  r.canonicalize();
  return r;
}

Rat coeffT_entry(long n, long k) {
  if (k < 0 || n < k) return 0;
  Rat r(Int(n - k), factorial(static_cast<unsigned long>(2 * n - 2 * k + 1)));
  r.canonicalize();
  return r;
}

namespace {

ExactMatrix window(std::size_t size, Rat (*entry)(long, long)) {
  if (size > limits().matrix_size_cap)
    throw BudgetError("coefficient matrix: size " + std::to_string(size) + " exceeds matrix cap");
  ExactMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = entry(static_cast<long>(i) + 2, static_cast<long>(j) + 1);
  return m;
}

}  // namespace

ExactMatrix coeffN_matrix(std::size_t size) { return window(size, coeffN_entry); }
ExactMatrix coeffT_matrix(std::size_t size) { return window(size, coeffT_entry); }

Rat minuscule_T_sequence(long k) {
  if (k < 0) return 0;
  Rat r(Int(k), factorial(static_cast<unsigned long>(2 * k + 1)));
  r.canonicalize();
  return r;
}

ExactMatrix build_matrix(MatrixKind kind, std::size_t size, const std::function<Rat(long)>& seq) {
  if (size < 1) throw DomainError("build_matrix: size must be >= 1");
  switch (kind) {
    case MatrixKind::Toeplitz:
      if (!seq) throw DomainError("build_matrix: Toeplitz needs a sequence");
      return toeplitz(seq, size);
    case MatrixKind::CoeffN:
      return coeffN_matrix(size);
    case MatrixKind::CoeffT:
      return coeffT_matrix(size);
  }
  throw DomainError("build_matrix: unknown kind");
}

}  // namespace minuscule::families
