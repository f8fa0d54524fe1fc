#pragma once

#include <string>

#include "minuscule/rational.hpp"

namespace minuscule {

/// mantissa * 2^exponent. Kept with an odd mantissa (or zero) so equal values compare equal.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Int mantissa, long exponent);
  static Dyadic from_int(const Int& z) { return Dyadic(z, 0); }

  const Int& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  Rat to_rat() const;

  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }

 private:
  Int mantissa_ = 0;
  long exponent_ = 0;
};

/// Root enclosure. lo == hi means the root is exactly lo; otherwise the root
/// lies in the open interval (lo, hi) and neither endpoint is a root.
struct DyadicInterval {
  Dyadic lo;
  Dyadic hi;

  bool exact() const { return lo == hi; }
  Rat width() const { return hi.to_rat() - lo.to_rat(); }
  /// Width is at most 2^log2_width.
  bool narrower_than(long log2_width) const;
};

std::string to_string(const Dyadic& d);
std::string to_string(const DyadicInterval& iv);

}  // namespace minuscule
