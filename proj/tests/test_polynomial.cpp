#include <gtest/gtest.h>

#include <random>

#include "discarr/errors.hpp"
#include "discarr/polynomial.hpp"

using namespace discarr;

namespace {

RationalPoly P(std::vector<Rational> c) { return RationalPoly(std::move(c)); }

}  // namespace

TEST(RationalPoly, TrimsAndReportsDegree) {
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({1, 2, 0}).degree(), 1);
  EXPECT_EQ(P({}).degree(), -1);
}

TEST(RationalPoly, DivmodReconstructsDividend) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> a(6), b(3);
    for (auto& c : a) c = d(rng);
    for (auto& c : b) c = Rational(d(rng), 3);
    b.back() = Rational(d(rng) == 0 ? 1 : 2, 7);
    const RationalPoly pa = P(a), pb = P(b);
    auto [q, r] = pa.divmod(pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
  EXPECT_THROW(P({1, 1}).divmod(RationalPoly()), Error);
}

TEST(RationalPoly, GcdIsMonicCommonFactor) {
  const RationalPoly f = P({-1, 1}) * P({2, 0, 1});  // (x-1)(x^2+2)
  const RationalPoly g = P({-1, 1}) * P({3, 1});
  EXPECT_EQ(gcd(f, g), P({-1, 1}));
  EXPECT_EQ(gcd(f * Rational(5), f), f.monic());
}

TEST(RationalPoly, InverseModulo) {
  const RationalPoly m = P({1, 1, 1});
  const RationalPoly a = P({2, -3});
  const RationalPoly s = inverse_mod(a, m);
  EXPECT_EQ((s * a).divmod(m).second, P({1}));
  EXPECT_THROW(inverse_mod(P({-1, 1}), P({-1, 0, 1})), Error);
}

TEST(RationalPoly, RationalRootsAgainstEvaluation) {
  // 6x^3 - 11x^2 + 6x - 1 = (x - 1)(2x - 1)(3x - 1)
  const RationalPoly p = P({-1, 6, -11, 6});
  const auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  for (const auto& r : roots) EXPECT_EQ(p.evaluate(r), 0);
  EXPECT_EQ(roots.front(), Rational(1, 3));
  // Brute force over small fractions: every root is found.
  for (int num = -12; num <= 12; ++num)
    for (int den = 1; den <= 6; ++den) {
      Rational x(num, den);
      x.canonicalize();
      if (p.evaluate(x) == 0) EXPECT_NE(std::find(roots.begin(), roots.end(), x), roots.end());
    }
}

TEST(RationalPoly, SplitRationalRootsKeepsMultiplicity) {
  const RationalPoly p = P({0, 0, 1}) * P({-1, 1, 1});  // x^2 (x^2 + x - 1)
  auto [roots, cof] = split_rational_roots(p);
  EXPECT_EQ(roots, (std::vector<Rational>{0, 0}));
  EXPECT_EQ(cof.monic(), P({-1, 1, 1}));
}

TEST(RationalPoly, IrreducibilityOverQ) {
  EXPECT_TRUE(is_irreducible_over_q(P({-1, 1, 1})));
  EXPECT_TRUE(is_irreducible_over_q(P({1, -1, 1})));
  EXPECT_FALSE(is_irreducible_over_q(P({-1, 0, 1})));
  EXPECT_TRUE(is_irreducible_over_q(P({-2, 0, 0, 1})));
  // (x^2 + 1)(x^2 + 2) has no rational root but factors.
  EXPECT_FALSE(is_irreducible_over_q(P({1, 0, 1}) * P({2, 0, 1})));
  EXPECT_FALSE(is_irreducible_over_q(P({1, 1, 1}) * P({3, 0, 1})));
  EXPECT_TRUE(is_irreducible_over_q(P({1, 0, 0, 0, 1})));
  EXPECT_THROW(is_irreducible_over_q(P({1, 0, 0, 0, 0, 1})), Error);
}

TEST(RationalPoly, Formatting) {
  EXPECT_EQ(P({-1, 1, 1}).to_string('x'), "x^2 + x - 1");
  EXPECT_EQ(P({0, -2, 2}).to_string('x'), "2*x^2 - 2*x");
  EXPECT_EQ(RationalPoly().to_string('x'), "0");
}

TEST(ModP, InverseAndIrreducibility) {
  for (std::int64_t a = 1; a < 13; ++a) EXPECT_EQ(modp::reduce(a * modp::inverse(a, 13), 13), 1);
  EXPECT_TRUE(modp::is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(modp::is_irreducible({1, 0, 1}, 2));  // (x+1)^2
  EXPECT_TRUE(modp::is_irreducible({1, 1, 0, 1}, 2));
  // Brute force: a quadratic over F_p is irreducible iff it has no root.
  for (std::int64_t c0 = 0; c0 < 5; ++c0)
    for (std::int64_t c1 = 0; c1 < 5; ++c1) {
      bool root = false;
      for (std::int64_t x = 0; x < 5; ++x) root = root || (c0 + c1 * x + x * x) % 5 == 0;
      EXPECT_EQ(modp::is_irreducible({c0, c1, 1}, 5), !root) << c0 << " " << c1;
    }
}
