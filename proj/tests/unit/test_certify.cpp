#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "minuscule/certify.hpp"
#include "minuscule/error.hpp"
#include "minuscule/families.hpp"
#include "support.hpp"

namespace minuscule {
namespace {

using namespace certify;
using testing::P;
using testing::random_rat;
using testing::uniform;

Poly linear_root(const Rat& r) { return Poly({-r, Rat(1)}); }

Poly from_roots(const std::vector<Rat>& roots) {
  Poly p = P({1});
  for (const auto& r : roots) p = p * linear_root(r);
  return p;
}

std::vector<Rat> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(Sturm, CountRootsExamples) {
  const auto chain = sturm_chain(P({2, -3, 1}));
  EXPECT_EQ(count_roots_in(chain, Endpoint::at(0), Endpoint::at(3)), 2);
  EXPECT_EQ(count_roots_in(chain, Endpoint::at(1), Endpoint::at(2)), 1);
  EXPECT_EQ(count_roots_in(chain, Endpoint::neg_inf(), Endpoint::at(1)), 1);
  EXPECT_EQ(count_roots_in(sturm_chain(families::f_poly(2)), Endpoint::neg_inf(), Endpoint::at(0)), 2);
  EXPECT_THROW(count_roots_in(chain, Endpoint::at(2), Endpoint::at(1)), DomainError);
  EXPECT_THROW(sturm_chain(Poly()), DomainError);
}

// Products of random rational linear factors, sometimes with a positive-definite quadratic.
TEST(Sturm, RandomProductsMatchConstruction) {
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rat> roots;
    const long count = uniform(1, 8);
    for (long i = 0; i < count; ++i) roots.push_back(random_rat(6));
    if (uniform(0, 3) == 0) roots.push_back(roots.front());
    const bool complex_pair = uniform(0, 2) == 0;
    Poly p = from_roots(roots);
    if (complex_pair) {
      const Rat r = random_rat(5);
      p = p * Poly({r * r + 1, Rat(0), Rat(1)});
    }
    p = Rat(uniform(1, 7)) * p;

    const std::set<Rat> distinct(roots.begin(), roots.end());
    const auto chain = sturm_chain(p);
    EXPECT_EQ(chain.count_real_roots(), static_cast<int>(distinct.size()));
    EXPECT_EQ(certify_real_rooted(p).pass, !complex_pair);

    const Rat a = random_rat(6);
    const Rat b = a + Rat(uniform(1, 6));
    const auto inside =
        std::count_if(distinct.begin(), distinct.end(), [&](const Rat& r) { return a < r && r <= b; });
    EXPECT_EQ(count_roots_in(chain, Endpoint::at(a), Endpoint::at(b)), inside);
  }
}

TEST(RealRooted, WitnessAndSide) {
  const auto ok = certify_real_rooted(P({0, 0, 1, 1}));
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.witness["degree"], 3);
  EXPECT_EQ(ok.witness["distinct_real_roots"], 2);
  EXPECT_TRUE(certify_real_rooted(P({2, 3, 1}), RootSide::NonPositive).pass);
  EXPECT_FALSE(certify_real_rooted(P({-2, 1, 1}), RootSide::NonPositive).pass);
  EXPECT_FALSE(certify_real_rooted(P({1, 0, 1})).pass);
  EXPECT_TRUE(certify_real_rooted(Poly()).pass);
  EXPECT_TRUE(certify_real_rooted(P({5})).pass);
}

TEST(RealRooted, FamiliesHaveNonpositiveRoots) {
  for (long n = 1; n <= 30; ++n) {
    EXPECT_TRUE(certify_real_rooted(families::minuscule_sum(n), RootSide::NonPositive).pass) << n;
    EXPECT_TRUE(certify_real_rooted(families::f_poly(n), RootSide::NonPositive).pass) << n;
  }
}

TEST(Interlacing, Examples) {
  // Roots of g strictly between those of f.
  EXPECT_TRUE(certify_interlacing(P({1, 1}), P({0, 2, 1})).pass);
  EXPECT_FALSE(certify_interlacing(P({3, 1}), P({0, 2, 1})).pass);
  // Equal degrees, g's roots each to the left.
  EXPECT_TRUE(certify_interlacing(from_roots(rats({-3, -1})), from_roots(rats({-2, 0}))).pass);
  EXPECT_FALSE(certify_interlacing(from_roots(rats({-2, 0})), from_roots(rats({-3, -1}))).pass);
  // Shared roots are allowed and reported.
  const auto shared = certify_interlacing(from_roots(rats({-1})), from_roots(rats({-1, -1})));
  EXPECT_TRUE(shared.pass);
  EXPECT_FALSE(certify_interlacing(P({1}), P({0, 0, 1})).pass);
  EXPECT_EQ(certify_interlacing(P({1}), P({0, 0, 1})).witness["reason"], "degree");
  EXPECT_THROW(certify_interlacing(P({1, 0, 1}), P({0, 1})), DomainError);
  EXPECT_THROW(certify_interlacing(Poly(), P({0, 1})), DomainError);
}

TEST(Interlacing, ConsecutiveFamilyMembers) {
  for (long n = 2; n <= 25; ++n) {
    EXPECT_TRUE(certify_interlacing(families::minuscule_sum(n), families::minuscule_sum(n + 1)).pass) << n;
    EXPECT_TRUE(certify_interlacing(families::f_poly(n), families::f_poly(n + 1)).pass) << n;
  }
}

TEST(Interlacing, ScalingDoesNotChangeVerdict) {
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> fr, gr;
    const long d = uniform(1, 5);
    for (long i = 0; i < d + 1; ++i) fr.push_back(random_rat(5));
    for (long i = 0; i < d; ++i) gr.push_back(random_rat(5));
    const Poly f = from_roots(fr), g = from_roots(gr);
    const bool base = certify_interlacing(g, f).pass;
    EXPECT_EQ(certify_interlacing(Rat(-3) * g, make_rat(7, 2) * f).pass, base);
  }
}

// Distinct-root equal-degree alternation can hold in at most one direction.
TEST(Interlacing, StrictAlternationIsAntisymmetric) {
  for (int trial = 0; trial < 100; ++trial) {
    std::set<Rat> pool;
    while (pool.size() < 6) pool.insert(random_rat(9));
    std::vector<Rat> a, b;
    long i = 0;
    for (const auto& r : pool) (i++ % 2 ? a : b).push_back(r);
    const Poly f = from_roots(a), g = from_roots(b);
    EXPECT_FALSE(certify_interlacing(g, f).pass && certify_interlacing(f, g).pass);
    EXPECT_TRUE(certify_interlacing(g, f).pass || certify_interlacing(f, g).pass);
  }
}

TEST(CoeffProperties, Examples) {
  const auto binom = certify_coeff_properties(pow(P({1, 1}), 4));
  EXPECT_TRUE(binom.pass);
  EXPECT_TRUE(binom.witness["palindromic"].get<bool>());
  EXPECT_TRUE(binom.witness["log_concave"].get<bool>());
  const auto bumpy = certify_coeff_properties(P({1, 3, 1, 3}));
  EXPECT_FALSE(bumpy.witness["unimodal"].get<bool>());
  EXPECT_FALSE(bumpy.pass);
  const auto negative = certify_coeff_properties(P({1, -1}));
  EXPECT_FALSE(negative.pass);
  EXPECT_EQ(negative.witness["first_negative"], 1);
  EXPECT_TRUE(certify_coeff_properties(families::minuscule_sum(6), 6).pass);
  EXPECT_FALSE(certify_coeff_properties(families::minuscule_sum(6), 5).witness["palindromic"].get<bool>());
}

TEST(GammaPositive, Examples) {
  EXPECT_TRUE(certify_gamma_positive(families::minuscule_sum(5), 5).pass);
  const auto bad = certify_gamma_positive(P({0, 1, -3, 1}), 4);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.witness["first_bad_k"], 2);
  EXPECT_THROW(certify_gamma_positive(P({1, 2}), 1), DomainError);
}

TEST(WeakHurwitz, Examples) {
  EXPECT_TRUE(certify_weak_hurwitz(pow(P({1, 1}), 12)).pass);
  EXPECT_TRUE(certify_weak_hurwitz(P({0, 0, 4})).pass);
  EXPECT_TRUE(certify_weak_hurwitz(P({1, 1, 1, 1})).pass);
  EXPECT_TRUE(certify_weak_hurwitz(P({1, 0, 1})).pass);
  EXPECT_TRUE(certify_weak_hurwitz(Poly()).pass);
  EXPECT_FALSE(certify_weak_hurwitz(P({1, -1, 1})).pass);
  EXPECT_FALSE(certify_weak_hurwitz(P({1, 0, 0, 1})).pass);
  EXPECT_FALSE(certify_weak_hurwitz(P({-1, 1})).pass);
  const auto w = certify_weak_hurwitz(P({0, 0, 1, 1})).witness;
  EXPECT_EQ(w["zero_root_multiplicity"], 2);
}

// Products of left-half-plane factors pass; one right-half-plane factor fails.
TEST(WeakHurwitz, RandomFactorProducts) {
  for (int trial = 0; trial < 150; ++trial) {
    Poly p = P({1});
    const long factors = uniform(1, 5);
    for (long i = 0; i < factors; ++i) {
      const Rat a = make_rat(uniform(0, 6), uniform(1, 4));
      const Rat c = make_rat(uniform(1, 9), uniform(1, 4));
      p = p * (uniform(0, 1) ? Poly({a, Rat(1)}) : Poly({c, a, Rat(1)}));
    }
    const bool stable = certify_weak_hurwitz(p).pass;
    EXPECT_TRUE(stable) << to_string(p);
    const Rat bad = make_rat(uniform(1, 6), uniform(1, 3));
    const Poly q = p * (uniform(0, 1) ? Poly({-bad, Rat(1)}) : Poly({Rat(uniform(1, 5)), -bad, Rat(1)}));
    EXPECT_FALSE(certify_weak_hurwitz(q).pass) << to_string(q);
  }
}

TEST(WeakHurwitz, DFamilySmall) {
  for (long n = 2; n <= 20; ++n) EXPECT_TRUE(certify_weak_hurwitz(families::D_direct(n)).pass) << n;
}

TEST(Multiplier, Examples) {
  const auto quad = rats({0, 2, 2, 0});
  const auto ok = check_multiplier_nseq(quad, 3);
  EXPECT_TRUE(ok.pass);
  const auto bad = rats({1, 0, 1});
  EXPECT_FALSE(check_multiplier_nseq(bad, 2).pass);
  EXPECT_THROW(check_multiplier_nseq(quad, 2), DomainError);
  const auto neg = rats({1, -1, 1});
  EXPECT_THROW(check_multiplier_nseq(neg, 2), DomainError);
}

TEST(Multiplier, KTimesNMinusKForAllN) {
  for (long n = 2; n <= 30; ++n) {
    std::vector<Rat> w;
    for (long k = 0; k <= n; ++k) w.emplace_back(k * (n - k));
    EXPECT_TRUE(check_multiplier_nseq(w, n).pass) << n;
  }
}

}  // namespace
}  // namespace minuscule
