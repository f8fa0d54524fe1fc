#include "minuscule/sturm.hpp"

#include <algorithm>

#include "minuscule/error.hpp"

namespace minuscule {
namespace {

void divide_positive_content(ZPoly& p) {
  zpoly::trim(p);
  if (p.empty()) return;
  const Int g = zpoly::content(p);
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

int sign_at_endpoint(const ZPoly& p, const Endpoint& x) {
  if (p.empty()) return 0;
  if (x.is_pos_inf()) return sgn(p.back());
  if (x.is_neg_inf()) return zpoly::degree(p) % 2 == 0 ? sgn(p.back()) : -sgn(p.back());
  return zpoly::sign_at(p, x.value());
}

template <typename SignFn>
int count_variations(std::span<const ZPoly> chain, SignFn sign_of) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Smallest E >= 1 with every root strictly inside (-2^E, 2^E) (Cauchy bound).
long root_bound_exponent(const ZPoly& p) {
  std::size_t max_bits = 0;
  for (const auto& c : p) max_bits = std::max(max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const auto lead_bits = static_cast<long>(mpz_sizeinbase(p.back().get_mpz_t(), 2));
  return std::max(1L, static_cast<long>(max_bits) - lead_bits + 2);
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  ZPoly base = zpoly::from_poly(square_free_part(p));
  chain_.push_back(std::move(base));
  if (zpoly::degree(chain_.front()) < 1) return;
  ZPoly d = zpoly::derivative(chain_.front());
  divide_positive_content(d);
  chain_.push_back(std::move(d));
  while (zpoly::degree(chain_.back()) > 0) {
    const ZPoly& a = chain_[chain_.size() - 2];
    const ZPoly& b = chain_.back();
    ZPoly r = zpoly::prem(a, b);
    // prem scales by lc(b)^(delta+1); undo a negative factor so r is a positive multiple of a mod b.
    const long power = zpoly::degree(a) - zpoly::degree(b) + 1;
    const bool flip = sgn(b.back()) < 0 && power % 2 != 0;
    if (r.empty()) throw InternalError("Sturm chain: remainder vanished before a constant; input was not square-free");
    divide_positive_content(r);
    if (!flip)
      for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations(const Endpoint& x) const {
  return count_variations(chain_, [&](const ZPoly& q) { return sign_at_endpoint(q, x); });
}

int SturmChain::variations(const Dyadic& x) const {
  return count_variations(chain_, [&](const ZPoly& q) { return zpoly::sign_at_dyadic(q, x.mantissa(), x.exponent()); });
}

int SturmChain::count_roots(const Endpoint& a, const Endpoint& b) const { return variations(a) - variations(b); }

RootIsolator::RootIsolator(const Poly& p) : chain_(p) {
  const ZPoly& base = chain_.base();
  const long deg = zpoly::degree(base);
  const int real = chain_.count_real_roots();
  if (real != deg)
    throw DomainError("root isolation: polynomial has " + std::to_string(real) + " distinct real roots but " +
                      "square-free degree " + std::to_string(deg));
  if (deg == 0) return;

  const long e = root_bound_exponent(base);
  struct Pending {
    Dyadic lo, hi;
    int vlo, vhi;
  };
  Dyadic lo(Int(-1), e);
  Dyadic hi(Int(1), e);
  std::vector<Pending> stack{{lo, hi, chain_.variations(lo), chain_.variations(hi)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    const int count = cur.vlo - cur.vhi;
    if (count == 0) continue;
    if (count > 1) {
      Dyadic mid = Dyadic::midpoint(cur.lo, cur.hi);
      const int vmid = chain_.variations(mid);
      stack.push_back({mid, cur.hi, vmid, cur.vhi});
      stack.push_back({cur.lo, std::move(mid), cur.vlo, vmid});
      continue;
    }
    // Exactly one root in (lo, hi]. Make both endpoints non-roots or pin the root exactly.
    if (sign_at(cur.hi) == 0) {
      roots_.push_back({cur.hi, cur.hi});
      continue;
    }
    bool pinned = false;
    while (sign_at(cur.lo) == 0) {
      Dyadic mid = Dyadic::midpoint(cur.lo, cur.hi);
      const int vmid = chain_.variations(mid);
      if (cur.vlo - vmid == 0) {
        cur.lo = std::move(mid);
        cur.vlo = vmid;
      } else {
        cur.hi = mid;
        cur.vhi = vmid;
        if (sign_at(mid) == 0) {
          roots_.push_back({mid, mid});
          pinned = true;
          break;
        }
      }
    }
    if (!pinned) roots_.push_back({std::move(cur.lo), std::move(cur.hi)});
  }
  std::sort(roots_.begin(), roots_.end(), [](const DyadicInterval& a, const DyadicInterval& b) { return a.lo < b.lo; });
}

int RootIsolator::sign_at(const Dyadic& x) const {
  return zpoly::sign_at_dyadic(chain_.base(), x.mantissa(), x.exponent());
}

void RootIsolator::bisect(DyadicInterval& iv) const {
  if (iv.exact()) return;
  Dyadic mid = Dyadic::midpoint(iv.lo, iv.hi);
  const int s = sign_at(mid);
  if (s == 0) {
    iv.lo = mid;
    iv.hi = std::move(mid);
  } else if (s == sign_at(iv.lo)) {
    iv.lo = std::move(mid);
  } else {
    iv.hi = std::move(mid);
  }
}

bool RootIsolator::refine(std::size_t i, long log2_width, long max_steps) {
  DyadicInterval& iv = roots_.at(i);
  if (iv.exact()) return true;
  const Rat target = pow2_rat(log2_width);
  const int slo = sign_at(iv.lo);
  for (long step = 0; step < max_steps; ++step) {
    if (iv.exact() || iv.width() <= target) return true;
    Dyadic mid = Dyadic::midpoint(iv.lo, iv.hi);
    const int s = sign_at(mid);
    if (s == 0) {
      iv.lo = mid;
      iv.hi = std::move(mid);
    } else if (s == slo) {
      iv.lo = std::move(mid);
    } else {
      iv.hi = std::move(mid);
    }
  }
  return iv.exact() || iv.width() <= target;
}

std::vector<DyadicInterval> isolate_roots(const Poly& p, std::optional<long> log2_width) {
  RootIsolator iso(p);
  if (log2_width)
    for (std::size_t i = 0; i < iso.roots().size(); ++i) iso.refine(i, *log2_width);
  return iso.roots();
}

}  // namespace minuscule
