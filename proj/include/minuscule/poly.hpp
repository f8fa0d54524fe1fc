#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "minuscule/rational.hpp"

namespace minuscule {

/// Dense univariate polynomial over Q, coefficients ascending by degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and degree() == coeffs().size() - 1 otherwise. Values are
/// immutable through the public interface; every operation returns a new Poly.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t k);
  /// (a + b x)^n, expanded by repeated multiplication.
  static Poly binomial_power(const Rat& a, const Rat& b, unsigned n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Rat> coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  const Rat& operator[](std::size_t k) const;
  const Rat& leading() const;
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// All coefficients integral.
  bool is_integral() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rat& c) { return c * p; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

Poly pow(const Poly& p, unsigned e);
Poly derivative(const Poly& p);
/// Exact Horner evaluation.
Rat evaluate(const Poly& p, const Rat& x);

/// x^m * p(x).
Poly shift_up(const Poly& p, std::size_t m);
/// p(x) / x^m; throws DomainError if x^m does not divide p.
Poly shift_down(const Poly& p, std::size_t m);

/// p(x^2).
Poly compose_x2(const Poly& p);
/// r with r(x^2) == q; throws DomainError if q has a nonzero odd-degree coefficient.
Poly even_part_extract(const Poly& q);

/// f(x) == even(x^2) + x * odd(x^2).
struct EvenOddSplit {
  Poly even;
  Poly odd;
};
EvenOddSplit even_odd_split(const Poly& f);
Poly recombine(const EvenOddSplit& s);

/// x^n p(1/x); requires deg p <= n.
Poly reverse(const Poly& p, std::size_t n);
bool is_palindromic(const Poly& p, std::size_t n);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
/// Euclidean division over Q; throws DomainError on division by zero.
DivMod divmod(const Poly& a, const Poly& b);
/// a / b, throwing InternalError if the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);

/// c signed like the leading coefficient, so p / c is integral, primitive and has positive leading coefficient.
Rat content(const Poly& p);
Poly primitive_part(const Poly& p);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), primitive. Throws DomainError for the zero polynomial.
Poly square_free_part(const Poly& p);

/// Yun decomposition: p == c * prod_i factors[i]^(i+1), each factor square-free,
/// primitive and pairwise coprime. Trailing constant factors are dropped.
std::vector<Poly> square_free_decomposition(const Poly& p);

/// Human-readable form, e.g. "8x + 8x^2".
std::string to_string(const Poly& p);
/// Coefficients as wire strings, ascending.
std::vector<std::string> coeff_strings(const Poly& p);

}  // namespace minuscule
