#include "minuscule/poly.hpp"

#include <algorithm>
#include <sstream>

#include "minuscule/error.hpp"
#include "minuscule/kernels.hpp"
#include "minuscule/zpoly.hpp"

namespace minuscule {
namespace {

const Rat kZero(0);

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::binomial_power(const Rat& a, const Rat& b, unsigned n) { return pow(Poly{a, b}, n); }

const Rat& Poly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

const Rat& Poly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

std::size_t Poly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return k;
  return 0;
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

Poly Poly::operator-() const {
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) { return Poly(kernels::convolve(a.coeffs_, b.coeffs_)); }

Poly operator*(const Rat& c, const Poly& p) {
  if (c == 0) return {};
  std::vector<Rat> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
  return Poly(std::move(v));
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rat> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k <= v.size(); ++k) v[k - 1] = Rat(static_cast<long>(k)) * p[k];
  return Poly(std::move(v));
}

Rat evaluate(const Poly& p, const Rat& x) {
  Rat acc = 0;
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly shift_up(const Poly& p, std::size_t m) {
  if (p.is_zero()) return {};
  std::vector<Rat> v(m + p.coeffs().size());
  std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin() + static_cast<long>(m));
  return Poly(std::move(v));
}

Poly shift_down(const Poly& p, std::size_t m) {
  if (p.is_zero()) return {};
  if (p.valuation() < m) throw DomainError("shift_down: x^" + std::to_string(m) + " does not divide " + to_string(p));
  return Poly(std::vector<Rat>(p.coeffs().begin() + static_cast<long>(m), p.coeffs().end()));
}

Poly compose_x2(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<Rat> v(2 * p.coeffs().size() - 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) v[2 * k] = p[k];
  return Poly(std::move(v));
}

Poly even_part_extract(const Poly& q) {
  std::vector<Rat> v((q.coeffs().size() + 1) / 2);
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
    if (k % 2 == 1) {
      if (q[k] != 0) throw DomainError("even_part_extract: odd coefficient at x^" + std::to_string(k));
    } else {
      v[k / 2] = q[k];
    }
  }
  return Poly(std::move(v));
}

EvenOddSplit even_odd_split(const Poly& f) {
  const std::size_t n = f.coeffs().size();
  std::vector<Rat> even((n + 1) / 2);
  std::vector<Rat> odd(n / 2);
  for (std::size_t k = 0; k < n; ++k) (k % 2 == 0 ? even[k / 2] : odd[k / 2]) = f[k];
  return {Poly(std::move(even)), Poly(std::move(odd))};
}

Poly recombine(const EvenOddSplit& s) { return compose_x2(s.even) + shift_up(compose_x2(s.odd), 1); }

Poly reverse(const Poly& p, std::size_t n) {
  if (p.degree() > static_cast<long>(n))
    throw DomainError("reverse: degree " + std::to_string(p.degree()) + " exceeds n = " + std::to_string(n));
  std::vector<Rat> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[n - k] = p[k];
  return Poly(std::move(v));
}

bool is_palindromic(const Poly& p, std::size_t n) {
  if (p.degree() > static_cast<long>(n)) return false;
  for (std::size_t k = 0; k <= n / 2; ++k)
    if (p[k] != p[n - k]) return false;
  return true;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rat> quot(rem.size() - db);
  const Rat inv_lead = 1 / b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rat q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("exact_div: " + to_string(b) + " does not divide " + to_string(a));
  return q;
}

Rat content(const Poly& p) {
  if (p.is_zero()) return 1;
  Int num = 0;
  Int den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat r = make_rat(num, den);
  return p.leading() < 0 ? Rat(-r) : r;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return {};
  return Rat(1 / content(p)) * p;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  return zpoly::to_poly(zpoly::gcd(zpoly::from_poly(a), zpoly::from_poly(b)));
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("square_free_part of the zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  const Poly g = gcd(p, derivative(p));
  return primitive_part(exact_div(p, g));
}

std::vector<Poly> square_free_decomposition(const Poly& p) {
  if (p.is_zero()) throw DomainError("square_free_decomposition of the zero polynomial");
  std::vector<Poly> factors;
  if (p.degree() == 0) return factors;
  const Poly dp = derivative(p);
  const Poly a0 = gcd(p, dp);
  Poly b = exact_div(p, a0);
  Poly c = exact_div(dp, a0);
  Poly d = c - derivative(b);
  while (b.degree() > 0) {
    const Poly a = gcd(b, d);
    factors.push_back(primitive_part(a));
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rat& c = p[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::vector<std::string> coeff_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace minuscule
