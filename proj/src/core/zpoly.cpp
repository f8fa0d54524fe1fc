#include "minuscule/zpoly.hpp"

#include <utility>

#include "minuscule/error.hpp"

namespace minuscule::zpoly {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int content(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  Int g = content(p);
  if (p.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly from_poly(const Poly& p) {
  Int den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int q;
    mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), p[i].get_den_mpz_t());
    out[i] = p[i].get_num() * q;
  }
  make_primitive(out);
  return out;
}

Poly to_poly(const ZPoly& p) {
  std::vector<Rat> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rat(p[i]);
  return Poly(std::move(v));
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<unsigned long>(k);
  return d;
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DomainError("pseudo-remainder by the zero polynomial");
  ZPoly r = a;
  trim(r);
  const long db = degree(b);
  long e = degree(r) - db + 1;
  if (e <= 0) return r;
  const Int& lb = b.back();
  while (degree(r) >= db) {
    const long shift = degree(r) - db;
    const Int lr = r.back();
    for (auto& c : r) c *= lb;
    for (long j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
    --e;
  }
  if (e > 0) {
    Int f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = a_in;
  ZPoly b = b_in;
  make_primitive(a);
  make_primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  Int g = 1;
  Int h = 1;
  while (true) {
    const long delta = degree(a) - degree(b);
    ZPoly r = prem(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return ZPoly{Int(1)};
    a = std::move(b);
    Int divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Int num, den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  make_primitive(b);
  return b;
}

int sign_at_dyadic(const ZPoly& p, const Int& mantissa, long exponent) {
  if (p.empty()) return 0;
  Int acc = p.back();
  const long d = degree(p);
  if (exponent >= 0) {
    Int x = mantissa;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(exponent));
    for (long i = d - 1; i >= 0; --i) {
      acc *= x;
      acc += p[static_cast<std::size_t>(i)];
    }
    return sgn(acc);
  }
  // Homogenized Horner: sum a_i m^i 2^{-e(d-i)} has the sign of p(m 2^e).
  const auto shift = static_cast<unsigned long>(-exponent);
  Int term;
  for (long i = d - 1; i >= 0; --i) {
    acc *= mantissa;
    mpz_mul_2exp(term.get_mpz_t(), p[static_cast<std::size_t>(i)].get_mpz_t(), shift * static_cast<unsigned long>(d - i));
    acc += term;
  }
  return sgn(acc);
}

int sign_at(const ZPoly& p, const Rat& x) {
  if (p.empty()) return 0;
  const Int& u = x.get_num();
  const Int& v = x.get_den();
  Int acc = p.back();
  Int vp = 1;
  for (long i = degree(p) - 1; i >= 0; --i) {
    vp *= v;
    acc *= u;
    acc += p[static_cast<std::size_t>(i)] * vp;
  }
  return sgn(acc);
}

}  // namespace minuscule::zpoly
