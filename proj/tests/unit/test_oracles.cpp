#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "minuscule/error.hpp"
#include "minuscule/families.hpp"
#include "minuscule/oracles.hpp"
#include "support.hpp"

namespace minuscule {
namespace {

using namespace oracles;
using testing::P;

TEST(Powerset, Examples) {
  EXPECT_EQ(powerset_refined_gf(2, 1, 1, 1, 1), 16);
  EXPECT_EQ(powerset_refined_gf(3, 2, 1, 1, 1), 125);
  EXPECT_EQ(powerset_refined_gf(0, 3, 5, 7, 11), 1);
  EXPECT_THROW(powerset_refined_gf(15, 1, 1, 1, 1), BudgetError);
  EXPECT_THROW(powerset_refined_gf(-1, 1, 1, 1, 1), DomainError);
}

TEST(Powerset, ParallelMatchesSerialAndBinomial) {
  const Rat a = make_rat(1, 2), b = 3, c = make_rat(-2, 3), d = 5;
  for (long n = 0; n <= 10; ++n) {
    const Rat expected = [&] {
      Rat r = 1;
      for (long i = 0; i < n; ++i) r *= a + b + c + d;
      return r;
    }();
    EXPECT_EQ(powerset_refined_gf(n, a, b, c, d), expected) << n;
    EXPECT_EQ(powerset_refined_gf_reference(n, a, b, c, d), expected) << n;
  }
}

TEST(SymmetricDifference, Examples) {
  EXPECT_EQ(symmetric_difference_sum(1), 2);
  EXPECT_EQ(symmetric_difference_sum(3), 96);
  EXPECT_EQ(symmetric_difference_gf(1), P({2, 2}));
  // Each element lands in X Δ Y for half of the four choices.
  for (long n = 0; n <= 10; ++n) {
    EXPECT_EQ(symmetric_difference_gf(n), pow(P({2, 2}), static_cast<unsigned>(n))) << n;
    Int direct = 0;
    for (unsigned x = 0; x < (1u << n); ++x)
      for (unsigned y = 0; y < (1u << n); ++y) direct += std::popcount(x ^ y);
    EXPECT_EQ(symmetric_difference_sum(n), direct) << n;
  }
  EXPECT_THROW(symmetric_difference_sum(13), BudgetError);
}

TEST(NumericRoots, SmallExamples) {
  const auto i = numeric_roots(P({1, 0, 1}));
  ASSERT_EQ(i.roots.size(), 2u);
  EXPECT_TRUE(i.converged);
  for (const auto& z : i.roots) {
    EXPECT_NEAR(static_cast<double>(z.real()), 0, 1e-12);
    EXPECT_NEAR(std::abs(static_cast<double>(z.imag())), 1, 1e-12);
  }
  auto f2 = numeric_roots(families::f_poly(2)).roots;
  std::sort(f2.begin(), f2.end(), [](auto x, auto y) { return x.real() < y.real(); });
  EXPECT_NEAR(static_cast<double>(f2[0].real()), -3, 1e-12);
  EXPECT_NEAR(static_cast<double>(f2[1].real()), -1.0 / 3, 1e-12);

  const auto origin = numeric_roots(P({0, 0, 1, 1}));
  EXPECT_EQ(origin.origin_roots, 2u);
  EXPECT_NEAR(static_cast<double>(max_real_part(origin, true)), -1, 1e-12);
  EXPECT_EQ(max_real_part(origin), 0);
  EXPECT_THROW(max_real_part(numeric_roots(P({0, 0, 1})), true), DomainError);
}

// Backward error stays at rounding level throughout; forward accuracy of the
// clustered roots degrades with degree, so imaginary parts are bounded only up to 40.
TEST(NumericRoots, RealRootedInputs) {
  for (long n = 2; n <= 60; ++n) {
    const auto r = numeric_roots(families::minuscule_sum(n));
    EXPECT_TRUE(r.converged) << n;
    EXPECT_LT(static_cast<double>(r.max_residual), 1e-15) << n;
    if (n > 40) continue;
    for (const auto& z : r.roots) {
      EXPECT_LE(static_cast<double>(z.real()), 1e-9) << n;
      EXPECT_LT(std::abs(static_cast<double>(z.imag())), 1e-9 * (1 + std::abs(static_cast<double>(z.real())))) << n;
    }
  }
}

TEST(Chebyshev, ProductFormMatchesExact) {
  for (long n = 0; n <= 20; ++n)
    for (long double x : {-0.9L, -0.3L, 0.0L, 0.45L, 0.99L}) {
      const long double exact = evaluate_numeric(families::chebyshev_U(n), x);
      EXPECT_NEAR(static_cast<double>(chebyshev_product_form(n, x)), static_cast<double>(exact), 1e-10)
          << n << " " << static_cast<double>(x);
    }
}

}  // namespace
}  // namespace minuscule
