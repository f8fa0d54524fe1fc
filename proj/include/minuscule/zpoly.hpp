#pragma once

#include <vector>

#include "minuscule/poly.hpp"
#include "minuscule/rational.hpp"

namespace minuscule {

/// Integer polynomial used inside remainder sequences, where rational
/// canonicalization would dominate the cost. Same normalization as Poly.
using ZPoly = std::vector<Int>;

namespace zpoly {

inline long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }
void trim(ZPoly& p);

/// Primitive integer multiple of p with positive leading coefficient.
ZPoly from_poly(const Poly& p);
Poly to_poly(const ZPoly& p);

Int content(const ZPoly& p);
/// Divides out the (positive) content in place.
void make_primitive(ZPoly& p);

ZPoly derivative(const ZPoly& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
ZPoly prem(const ZPoly& a, const ZPoly& b);

/// gcd via the subresultant remainder sequence; primitive, positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Sign of p(m * 2^e).
int sign_at_dyadic(const ZPoly& p, const Int& mantissa, long exponent);
/// Sign of p(x) for rational x.
int sign_at(const ZPoly& p, const Rat& x);

}  // namespace zpoly
}  // namespace minuscule
