#include <gtest/gtest.h>

#include <random>

#include "discarr/exactfield.hpp"

using namespace discarr;

namespace {

std::vector<FieldDescriptor> sample_fields() {
  return {FieldDescriptor::rational(),        FieldDescriptor::quadratic(5), FieldDescriptor::quadratic(-3),
          FieldDescriptor::prime(7),          FieldDescriptor::galois(2, {1, 1, 1}),
          FieldDescriptor::galois(3, {1, 0, 1}), FieldDescriptor::cyclotomic(12), FieldDescriptor::cyclotomic(7)};
}

FieldElement random_element(const FieldDescriptor& fd, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6), den(1, 3);
  std::vector<Rational> c;
  for (int i = 0; i < fd.degree(); ++i) {
    if (fd.characteristic() == 0)
      c.emplace_back(d(rng), den(rng));
    else
      c.emplace_back(d(rng));
    c.back().canonicalize();
  }
  return FieldElement::from_coefficients(fd, c);
}

}  // namespace

TEST(ExactField, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (const auto& fd : sample_fields()) {
    for (int t = 0; t < 40; ++t) {
      const auto a = random_element(fd, rng), b = random_element(fd, rng), c = random_element(fd, rng);
      EXPECT_EQ(a + b, b + a) << fd.name();
      EXPECT_EQ(a * b, b * a) << fd.name();
      EXPECT_EQ((a + b) * c, a * c + b * c) << fd.name();
      EXPECT_EQ((a * b) * c, a * (b * c)) << fd.name();
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one()) << fd.name() << " " << a.to_string();
        EXPECT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(ExactField, DivisionByZeroThrows) {
  for (const auto& fd : sample_fields()) {
    EXPECT_THROW(FieldElement::zero(fd).inverse(), Error);
  }
}

TEST(ExactField, MixingFieldsThrows) {
  const auto a = FieldElement::one(FieldDescriptor::quadratic(5));
  const auto b = FieldElement::one(FieldDescriptor::quadratic(-1));
  EXPECT_THROW((void)(a + b), Error);
  EXPECT_THROW((void)(a == b), Error);
}

TEST(ExactField, QuadraticGeneratorSquaresToD) {
  for (long d : {-3L, -1L, 2L, 5L, 7L}) {
    const auto fd = FieldDescriptor::quadratic(d);
    const auto g = FieldElement::generator(fd);
    EXPECT_EQ(g * g, FieldElement::from_integer(fd, d));
  }
  EXPECT_THROW(FieldDescriptor::quadratic(4), Error);
  EXPECT_THROW(FieldDescriptor::quadratic(1), Error);
}

TEST(ExactField, GoldenRatioRelation) {
  const auto fd = FieldDescriptor::quadratic(5);
  const auto t = parse_element("1/2 + 1/2*g", fd);
  EXPECT_EQ(t * t, t + FieldElement::one(fd));
}

TEST(ExactField, CyclotomicPolynomialAgainstProductOracle) {
  // x^m - 1 = prod_{d | m} Phi_d(x), checked by multiplying out.
  for (int m = 1; m <= 40; ++m) {
    RationalPoly prod({1});
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * RationalPoly::from_integers(cyclotomic_polynomial(d));
    std::vector<Rational> xm(static_cast<std::size_t>(m) + 1, 0);
    xm.front() = -1;
    xm.back() = 1;
    EXPECT_EQ(prod, RationalPoly(xm)) << m;
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m));
  }
}

TEST(ExactField, ZetaHasExactOrder) {
  for (int m : {3, 4, 5, 8, 12, 24, 28, 40}) {
    const auto fd = FieldDescriptor::cyclotomic(m);
    const auto z = FieldElement::generator(fd);
    EXPECT_TRUE(z.pow(m).is_one());
    for (int d = 1; d < m; ++d)
      if (m % d == 0) EXPECT_FALSE(z.pow(d).is_one()) << m << " " << d;
    EXPECT_EQ(z.pow(-1) * z, FieldElement::one(fd));
  }
}

TEST(ExactField, PrimeFieldMatchesIntegerArithmetic) {
  const auto fd = FieldDescriptor::prime(13);
  for (long a = -20; a < 20; ++a)
    for (long b = -5; b < 5; ++b) {
      const auto x = FieldElement::from_integer(fd, a), y = FieldElement::from_integer(fd, b);
      EXPECT_EQ(x * y, FieldElement::from_integer(fd, a * b));
      EXPECT_EQ(x - y, FieldElement::from_integer(fd, a - b));
    }
  EXPECT_EQ(FieldElement::from_rational(fd, Rational(1, 2)) * FieldElement::from_integer(fd, 2), FieldElement::one(fd));
  EXPECT_THROW(FieldDescriptor::prime(15), Error);
}

TEST(ExactField, GaloisFieldOfOrderFour) {
  const auto fd = FieldDescriptor::galois(2, {1, 1, 1});
  const auto w = FieldElement::generator(fd);
  EXPECT_EQ(w * w, w + FieldElement::one(fd));
  EXPECT_TRUE(w.pow(3).is_one());
  EXPECT_EQ(field_elements(fd).size(), 4u);
  EXPECT_EQ(*fd.order(), 4);
  EXPECT_THROW(FieldDescriptor::galois(2, {1, 0, 1}), Error);  // reducible
  EXPECT_THROW(field_elements(FieldDescriptor::rational()), Error);
}

TEST(ExactField, ParseAndFormatRoundTrip) {
  std::mt19937_64 rng(5);
  for (const auto& fd : sample_fields())
    for (int t = 0; t < 30; ++t) {
      const auto a = random_element(fd, rng);
      EXPECT_EQ(parse_element(format_element(a), fd), a) << fd.name() << " " << format_element(a);
    }
  const auto q5 = FieldDescriptor::quadratic(5);
  EXPECT_EQ(format_element(parse_element(" 3/2 + 1/2 * g ", q5)), "3/2+1/2*g");
  EXPECT_EQ(format_element(parse_element("-4/6", FieldDescriptor::rational())), "-2/3");
  EXPECT_EQ(format_element(FieldElement::zero(q5)), "0");
}

TEST(ExactField, ParseErrorsCarryPosition) {
  const auto q = FieldDescriptor::rational();
  try {
    parse_element("1/", q);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_element("g", q), ParseError);
  EXPECT_THROW(parse_element("1/0", q), Error);
  EXPECT_THROW(parse_element("", q), ParseError);
}

TEST(ExactField, Names) {
  EXPECT_EQ(FieldDescriptor::rational().name(), "QQ");
  EXPECT_EQ(FieldDescriptor::quadratic(-3).name(), "QQ(sqrt(-3))");
  EXPECT_EQ(FieldDescriptor::prime(5).name(), "GF(5)");
  EXPECT_EQ(FieldDescriptor::galois(2, {1, 1, 1}).name(), "GF(2^2)");
  EXPECT_EQ(FieldDescriptor::cyclotomic(12).name(), "QQ(zeta_12)");
}
