#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minuscule/dyadic.hpp"
#include "minuscule/poly.hpp"
#include "minuscule/zpoly.hpp"

namespace minuscule {

/// Interval endpoint: a rational or one of the infinities.
class Endpoint {
 public:
  static Endpoint neg_inf() { return Endpoint(-1); }
  static Endpoint pos_inf() { return Endpoint(1); }
  static Endpoint at(Rat x) { return Endpoint(std::move(x)); }

  bool is_neg_inf() const { return infinity_ < 0; }
  bool is_pos_inf() const { return infinity_ > 0; }
  const Rat& value() const { return value_; }

 private:
  explicit Endpoint(int inf) : infinity_(inf) {}
  explicit Endpoint(Rat x) : infinity_(0), value_(std::move(x)) {}
  int infinity_ = 0;
  Rat value_;
};

/// Sturm chain of the square-free part of a polynomial, content-normalized to
/// primitive integer polynomials: p, p', then negated pseudo-remainders down to
/// a nonzero constant.
class SturmChain {
 public:
  /// Throws DomainError for the zero polynomial.
  explicit SturmChain(const Poly& p);

  std::span<const ZPoly> polys() const { return chain_; }
  /// The square-free polynomial the chain is built on.
  const ZPoly& base() const { return chain_.front(); }
  long degree() const { return zpoly::degree(chain_.front()); }

  /// Sign variations with zeros dropped.
  int variations(const Endpoint& x) const;
  int variations(const Dyadic& x) const;

  /// Distinct real roots in (a, b]; requires a < b.
  int count_roots(const Endpoint& a, const Endpoint& b) const;
  int count_real_roots() const { return count_roots(Endpoint::neg_inf(), Endpoint::pos_inf()); }

 private:
  std::vector<ZPoly> chain_;
};

/// Isolating intervals for the distinct real roots of a real-rooted polynomial.
///
/// Intervals come back ascending and pairwise disjoint. An interval with
/// lo == hi is an exact rational root; otherwise exactly one root lies strictly
/// inside and the square-free part changes sign between the endpoints.
class RootIsolator {
 public:
  /// Throws DomainError unless p is nonzero and real-rooted.
  explicit RootIsolator(const Poly& p);

  const std::vector<DyadicInterval>& roots() const { return roots_; }
  const SturmChain& chain() const { return chain_; }
  const ZPoly& square_free() const { return chain_.base(); }

  /// Bisects root i until its width is at most 2^log2_width. Returns false when
  /// max_steps bisections were not enough.
  bool refine(std::size_t i, long log2_width, long max_steps = 100000);
  /// One bisection step on an arbitrary isolating interval of this polynomial.
  void bisect(DyadicInterval& iv) const;
  /// Sign of the square-free part.
  int sign_at(const Dyadic& x) const;

 private:
  SturmChain chain_;
  std::vector<DyadicInterval> roots_;
};

/// Convenience: isolate and refine every root to width 2^log2_width.
std::vector<DyadicInterval> isolate_roots(const Poly& p, std::optional<long> log2_width = std::nullopt);

}  // namespace minuscule
