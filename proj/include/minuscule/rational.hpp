#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace minuscule {

using Int = mpz_class;
using Rat = mpq_class;

/// Lowest-terms rational with positive denominator; throws DomainError on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// "p" for integers, "p/q" otherwise. This is the wire format for every rational we emit.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Inverse of to_string(Rat). Accepts optional sign, rejects anything else.
Rat parse_rat(std::string_view text);

/// C(n, k); zero outside 0 <= k <= n.
Int binomial(long n, long k);
Int factorial(unsigned long n);
Int pow2(unsigned long e);

/// 2^e for signed e, as a rational.
Rat pow2_rat(long e);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }
inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

}  // namespace minuscule
