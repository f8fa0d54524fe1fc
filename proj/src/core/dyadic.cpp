#include "minuscule/dyadic.hpp"

namespace minuscule {

Dyadic::Dyadic(Int mantissa, long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<long>(tz);
  }
}

Rat Dyadic::to_rat() const { return Rat(mantissa_) * pow2_rat(exponent_); }

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
  const long e = std::min(a.exponent_, b.exponent_);
  Int ma = a.mantissa_;
  Int mb = b.mantissa_;
  mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<unsigned long>(a.exponent_ - e));
  mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<unsigned long>(b.exponent_ - e));
  return Dyadic(ma + mb, e - 1);
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  const long e = std::min(a.exponent_, b.exponent_);
  Int ma = a.mantissa_;
  Int mb = b.mantissa_;
  mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<unsigned long>(a.exponent_ - e));
  mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<unsigned long>(b.exponent_ - e));
  return ma < mb;
}

bool DyadicInterval::narrower_than(long log2_width) const { return width() <= pow2_rat(log2_width); }

std::string to_string(const Dyadic& d) { return to_string(d.to_rat()); }

std::string to_string(const DyadicInterval& iv) {
  if (iv.exact()) return "[" + to_string(iv.lo) + "]";
  return "(" + to_string(iv.lo) + ", " + to_string(iv.hi) + ")";
}

}  // namespace minuscule
