#include "minuscule/certify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "minuscule/error.hpp"
#include "minuscule/families.hpp"
#include "minuscule/oracles.hpp"

namespace minuscule::certify {

using nlohmann::json;

SturmChain sturm_chain(const Poly& p) { return SturmChain(p); }

int count_roots_in(const SturmChain& chain, const Endpoint& a, const Endpoint& b) {
  if (!a.is_neg_inf() && !b.is_pos_inf() && (a.is_pos_inf() || b.is_neg_inf() || !(a.value() < b.value())))
    throw DomainError("count_roots_in: empty interval");
  return chain.count_roots(a, b);
}

namespace {

const Endpoint kZero = Endpoint::at(Rat(0));

std::string describe(const Poly& p) { return "degree " + std::to_string(p.degree()) + " polynomial"; }

int roots_in_open_negative(const SturmChain& chain) {
  const int closed = chain.count_roots(Endpoint::neg_inf(), kZero);
  return closed - (zpoly::sign_at(chain.base(), Rat(0)) == 0 ? 1 : 0);
}

// Real roots of a real-rooted polynomial with multiplicities, ascending.
class RootMultiset {
 public:
  explicit RootMultiset(const Poly& p) : iso_(p), factors_(square_free_decomposition(p)) {
    for (const auto& iv : iso_.roots()) {
      int m = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (vanishes_in(zpoly::from_poly(factors_[i]), iv)) m = static_cast<int>(i) + 1;
      if (m == 0) throw InternalError("root multiplicity: no square-free factor vanishes at an isolated root");
      mult_.push_back(m);
    }
  }

  std::size_t size() const { return iso_.roots().size(); }
  DyadicInterval& interval(std::size_t i) { return intervals()[i]; }
  int multiplicity(std::size_t i) const { return mult_[i]; }
  const RootIsolator& isolator() const { return iso_; }
  std::vector<DyadicInterval>& intervals() {
    if (ivs_.empty()) ivs_ = iso_.roots();
    return ivs_;
  }

  /// q has a root inside the isolating interval. Valid when q's real roots are
  /// among this polynomial's roots, so q is nonzero at non-exact endpoints.
  static bool vanishes_in(const ZPoly& q, const DyadicInterval& iv) {
    if (iv.exact()) return zpoly::sign_at_dyadic(q, iv.lo.mantissa(), iv.lo.exponent()) == 0;
    return zpoly::sign_at_dyadic(q, iv.lo.mantissa(), iv.lo.exponent()) !=
           zpoly::sign_at_dyadic(q, iv.hi.mantissa(), iv.hi.exponent());
  }

 private:
  RootIsolator iso_;
  std::vector<Poly> factors_;
  std::vector<int> mult_;
  std::vector<DyadicInterval> ivs_;
};

// a < b for distinct roots held by two isolators; refines until the intervals separate.
bool less_distinct(DyadicInterval& a, const RootIsolator& ia, DyadicInterval& b, const RootIsolator& ib) {
  while (true) {
    if (a.hi <= b.lo && !(a.exact() && b.exact() && a.lo == b.lo)) return true;
    if (b.hi <= a.lo) return false;
    if (a.exact() && b.exact()) throw InternalError("root comparison: equal exact roots reported as distinct");
    // Bisect the wider one; exact intervals never need it.
    if (a.exact() || (!b.exact() && b.width() > a.width()))
      ib.bisect(b);
    else
      ia.bisect(a);
  }
}

struct MergedRoot {
  int f_mult = 0;
  int g_mult = 0;
  DyadicInterval where;
};

// Distinct roots of f and g merged ascending, with multiplicities in each.
std::vector<MergedRoot> merge_roots(RootMultiset& f, RootMultiset& g) {
  const Poly common = gcd(zpoly::to_poly(f.isolator().square_free()), zpoly::to_poly(g.isolator().square_free()));
  const ZPoly zc = zpoly::from_poly(common);
  std::vector<std::size_t> common_f, common_g;
  std::vector<bool> g_is_common(g.size(), false);
  std::vector<long> f_partner(f.size(), -1);
  if (common.degree() > 0) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (RootMultiset::vanishes_in(zc, f.interval(i))) common_f.push_back(i);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (RootMultiset::vanishes_in(zc, g.interval(j))) common_g.push_back(j);
    if (common_f.size() != common_g.size() || static_cast<long>(common_f.size()) != common.degree())
      throw InternalError("interlacing: common-root bookkeeping mismatch");
    for (std::size_t t = 0; t < common_f.size(); ++t) {
      f_partner[common_f[t]] = static_cast<long>(common_g[t]);
      g_is_common[common_g[t]] = true;
    }
  }
  std::vector<MergedRoot> out;
  std::size_t i = 0, j = 0;
  auto skip_common = [&] {
    while (j < g.size() && g_is_common[j]) ++j;
  };
  skip_common();
  while (i < f.size() || j < g.size()) {
    const bool take_f =
        j >= g.size() ||
        (i < f.size() && less_distinct(f.interval(i), f.isolator(), g.interval(j), g.isolator()));
    if (take_f) {
      MergedRoot r{f.multiplicity(i), 0, f.interval(i)};
      if (f_partner[i] >= 0) r.g_mult = g.multiplicity(static_cast<std::size_t>(f_partner[i]));
      out.push_back(std::move(r));
      ++i;
    } else {
      out.push_back({0, g.multiplicity(j), g.interval(j)});
      ++j;
      skip_common();
    }
  }
  return out;
}

json merged_to_json(const std::vector<MergedRoot>& merged) {
  json seq = json::array();
  for (auto it = merged.rbegin(); it != merged.rend(); ++it)
    seq.push_back({{"interval", to_string(it->where)}, {"f", it->f_mult}, {"g", it->g_mult}});
  return seq;
}

Certificate real_rooted_from_chain(const Poly& p, const SturmChain& chain, RootSide side) {
  Certificate cert{"real_rooted", describe(p), false};
  cert.params = {{"root_side", side == RootSide::NonPositive ? "nonpositive" : "any"}};
  const int real = chain.count_real_roots();
  const long sqf_degree = chain.degree();
  cert.witness = {{"degree", p.degree()},
                  {"square_free_degree", sqf_degree},
                  {"distinct_real_roots", real},
                  {"chain_length", chain.polys().size()}};
  cert.pass = real == sqf_degree;
  if (side == RootSide::NonPositive) {
    const int positive = chain.count_roots(kZero, Endpoint::pos_inf());
    cert.witness["positive_roots"] = positive;
    cert.pass = cert.pass && positive == 0;
  }
  return cert;
}

}  // namespace

Certificate certify_real_rooted(const Poly& p, RootSide side) {
  if (p.is_zero()) {
    Certificate cert{"real_rooted", describe(p), true};
    cert.params = {{"root_side", side == RootSide::NonPositive ? "nonpositive" : "any"}};
    cert.witness = {{"zero_polynomial", true}};
    return cert;
  }
  return real_rooted_from_chain(p, SturmChain(p), side);
}

Certificate certify_interlacing(const Poly& g, const Poly& f) {
  Certificate cert{"interlacing", "g: " + describe(g) + ", f: " + describe(f), false};
  if (f.is_zero() || g.is_zero()) throw DomainError("certify_interlacing: zero polynomial");
  const long gap = f.degree() - g.degree();
  cert.params = {{"deg_f", f.degree()}, {"deg_g", g.degree()}};
  if (gap != 0 && gap != 1) {
    cert.witness = {{"reason", "degree"}, {"degree_gap", gap}};
    // Still reject non-real-rooted input as an error, matching the contract.
    RootIsolator check_f(f), check_g(g);
    return cert;
  }
  RootMultiset rf(f), rg(g);
  const auto merged = merge_roots(rf, rg);

  // Descending position lists with multiplicity.
  std::vector<long> r, s;
  long equalities = 0;
  for (long pos = static_cast<long>(merged.size()) - 1; pos >= 0; --pos) {
    const auto& m = merged[static_cast<std::size_t>(pos)];
    for (int t = 0; t < m.f_mult; ++t) r.push_back(pos);
    for (int t = 0; t < m.g_mult; ++t) s.push_back(pos);
    if (m.f_mult > 0 && m.g_mult > 0) ++equalities;
  }
  cert.witness = {{"relation", gap == 1 ? "interlaces" : "alternates_left"},
                  {"shared_roots", equalities},
                  {"merged_descending", merged_to_json(merged)}};
  // Real-rootedness means every root is accounted for.
  if (static_cast<long>(r.size()) != f.degree() || static_cast<long>(s.size()) != g.degree())
    throw InternalError("certify_interlacing: root count differs from degree");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > r[i] || (i + 1 < r.size() && s[i] < r[i + 1])) {
      cert.witness["first_violation"] = i + 1;
      return cert;
    }
  }
  cert.pass = true;
  return cert;
}

Certificate certify_coeff_properties(const Poly& p, std::optional<long> center_sum) {
  Certificate cert{"coeff_properties", describe(p), false};
  const auto c = p.coeffs();
  const long deg = p.degree();
  json w = json::object();

  long first_negative = -1;
  for (long k = 0; k <= deg; ++k)
    if (c[static_cast<std::size_t>(k)] < 0) {
      first_negative = k;
      break;
    }
  w["nonnegative"] = first_negative < 0;
  if (first_negative >= 0) w["first_negative"] = first_negative;

  const long low = static_cast<long>(p.valuation());
  const long center = center_sum.value_or(p.is_zero() ? 0 : low + deg);
  bool palindromic = p.is_zero() || (center >= deg && is_palindromic(p, static_cast<std::size_t>(center)));
  w["palindromic"] = palindromic;
  w["palindromic_about"] = center;

  // Unimodal: nondecreasing then nonincreasing.
  long k = 0;
  while (k < deg && c[static_cast<std::size_t>(k)] <= c[static_cast<std::size_t>(k + 1)]) ++k;
  long violation = -1;
  for (long j = k; j < deg; ++j)
    if (c[static_cast<std::size_t>(j)] < c[static_cast<std::size_t>(j + 1)]) {
      violation = j + 1;
      break;
    }
  w["unimodal"] = violation < 0;
  if (violation >= 0) w["unimodal_violation"] = violation;

  long lc_violation = -1;
  for (long j = low + 1; j <= deg - 1; ++j) {
    const auto& a = c[static_cast<std::size_t>(j)];
    if (a * a < c[static_cast<std::size_t>(j - 1)] * c[static_cast<std::size_t>(j + 1)]) {
      lc_violation = j;
      break;
    }
  }
  w["log_concave"] = lc_violation < 0;
  if (lc_violation >= 0) w["log_concave_violation"] = lc_violation;

  cert.pass = first_negative < 0 && palindromic && violation < 0 && lc_violation < 0;
  cert.witness = std::move(w);
  return cert;
}

Certificate certify_gamma_positive(const Poly& p, long n) {
  Certificate cert{"gamma_positive", describe(p), false};
  cert.params = {{"n", n}};
  const auto g = families::gamma_vector(p, n);
  std::vector<std::string> gs;
  long bad = -1;
  for (std::size_t k = 0; k < g.gammas.size(); ++k) {
    gs.push_back(to_string(g.gammas[k]));
    if (bad < 0 && (g.gammas[k] < 0 || !is_integer(g.gammas[k]))) bad = static_cast<long>(k);
  }
  cert.witness = {{"gamma", gs}};
  if (bad >= 0) cert.witness["first_bad_k"] = bad;
  cert.pass = bad < 0;
  return cert;
}

namespace {

// Strict Hermite–Biehler for coprime even/odd parts: the polynomial
// even(x^2) + x odd(x^2) has every root in the open left half-plane.
json strict_hermite_biehler(const Poly& even, const Poly& odd, bool& stable) {
  stable = false;
  if (odd.is_zero()) {
    stable = even.degree() == 0;
    return {{"decided_by", stable ? "constant" : "odd_part_zero"}};
  }
  const long gap = even.degree() - odd.degree();
  if (gap != 0 && gap != 1) return {{"decided_by", "degree_pattern"}, {"even_degree", even.degree()}, {"odd_degree", odd.degree()}};
  if (sgn(even.leading()) != sgn(odd.leading())) return {{"decided_by", "leading_sign"}};
  for (const Poly* part : {&even, &odd}) {
    if (part->degree() == 0) continue;
    const SturmChain chain(*part);
    if (chain.degree() != part->degree()) return {{"decided_by", "repeated_root"}};
    if (roots_in_open_negative(chain) != part->degree())
      return {{"decided_by", "root_not_negative_real"}, {"part", part == &even ? "even" : "odd"}};
  }
  if (even.degree() == 0 && odd.degree() == 0) {
    stable = true;
    return {{"decided_by", "linear"}};
  }
  if (even.degree() == 0) return {{"decided_by", "degree_pattern"}};
  RootMultiset re(even);
  if (odd.degree() == 0) {
    stable = re.size() == 1;
    return {{"decided_by", stable ? "alternation" : "degree_pattern"}};
  }
  RootMultiset ro(odd);
  const auto merged = merge_roots(re, ro);
  // Descending from the origin: even, odd, even, odd, ...
  bool expect_even = true;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    const bool is_even = it->f_mult > 0;
    if ((it->f_mult > 0) == (it->g_mult > 0) || is_even != expect_even)
      return {{"decided_by", "alternation"}, {"merged_descending", merged_to_json(merged)}};
    expect_even = !expect_even;
  }
  stable = true;
  return {{"decided_by", "alternation"}};
}

}  // namespace

Certificate certify_weak_hurwitz(const Poly& f, const HurwitzOptions& options) {
  Certificate cert{"weak_hurwitz", describe(f), false};
  cert.params = {{"cross_check_max_degree", options.cross_check_max_degree},
                 {"oracle_tolerance", options.oracle_tolerance}};
  if (f.is_zero()) {
    cert.pass = true;
    cert.witness = {{"zero_polynomial", true}};
    return cert;
  }
  const std::size_t zero_mult = f.valuation();
  const Poly f0 = shift_down(f, zero_mult);
  json w = {{"zero_root_multiplicity", zero_mult}};

  bool stable = true;
  if (f0.degree() > 0) {
    const auto [even, odd] = even_odd_split(f0);
    const Poly axis = odd.is_zero() ? primitive_part(even) : gcd(even, odd);
    w["imaginary_axis_factor_degree"] = axis.degree();
    if (axis.degree() > 0) {
      // Roots y of the common factor give x = ±sqrt(y); on the imaginary axis iff y < 0.
      const SturmChain chain(axis);
      const bool ok = chain.count_real_roots() == chain.degree() && roots_in_open_negative(chain) == chain.degree();
      if (!ok) {
        stable = false;
        w["reason"] = "imaginary_axis_factor";
      }
    }
    if (stable) {
      const Poly even1 = exact_div(even, axis);
      const Poly odd1 = odd.is_zero() ? Poly() : exact_div(odd, axis);
      bool strict = false;
      w["hermite_biehler"] = strict_hermite_biehler(even1, odd1, strict);
      stable = strict;
    }
  }
  cert.pass = stable;

  if (f0.degree() >= 1 && f.degree() <= options.cross_check_max_degree) {
    const auto numeric = oracles::numeric_roots(f0);
    const long double max_re = oracles::max_real_part(numeric);
    w["numeric_max_real_part_off_origin"] = static_cast<double>(max_re);
    w["numeric_converged"] = numeric.converged;
    if (numeric.converged) {
      const bool disagree =
          (stable && max_re > options.oracle_tolerance) || (!stable && max_re < -options.oracle_tolerance);
      if (disagree)
        throw InternalError("weak Hurwitz: exact verdict " + std::string(stable ? "pass" : "fail") +
                            " contradicts numeric max real part " + std::to_string(static_cast<double>(max_re)) +
                            " for " + to_string(f) + "; manual review needed");
    }
  }
  cert.witness = std::move(w);
  return cert;
}

Certificate check_multiplier_nseq(std::span<const Rat> weights, long n) {
  if (n < 0 || weights.size() != static_cast<std::size_t>(n + 1))
    throw DomainError("check_multiplier_nseq: need n+1 weights");
  for (const auto& w : weights)
    if (w < 0) throw DomainError("check_multiplier_nseq: weights must be nonnegative");
  std::vector<Rat> c(weights.size());
  for (long k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = Rat(binomial(n, k)) * weights[static_cast<std::size_t>(k)];
  const Poly p(std::move(c));
  if (p.is_zero()) {
    Certificate cert = certify_real_rooted(p);
    cert.property = "multiplier_n_sequence";
    cert.params = {{"n", n}};
    return cert;
  }
  const SturmChain chain(p);
  Certificate cert = real_rooted_from_chain(p, chain, RootSide::Any);
  cert.property = "multiplier_n_sequence";
  cert.params = {{"n", n}};
  if (!cert.pass) return cert;
  const int positive = chain.count_roots(kZero, Endpoint::pos_inf());
  const int negative = roots_in_open_negative(chain);
  cert.witness["positive_roots"] = positive;
  cert.witness["negative_roots"] = negative;
  cert.pass = positive == 0 || negative == 0;
  return cert;
}

}  // namespace minuscule::certify
