#include <gtest/gtest.h>

#include <random>

#include "hnambu/scalar.hpp"

using hnambu::ArithOp;
using hnambu::Scalar;

namespace {

Scalar random_scalar(std::mt19937& gen, bool gaussian) {
  auto part = [&] {
    long num = static_cast<long>(gen() % 41) - 20;
    long den = static_cast<long>(gen() % 9) + 1;
    return mpq_class(num, den);
  };
  mpq_class re = part();
  mpq_class im = gaussian ? part() : mpq_class(0);
  re.canonicalize();
  im.canonicalize();
  return Scalar(re, im);
}

}  // namespace

TEST(Scalar, RationalAddition) {
  EXPECT_EQ(*hnambu::scalar_arith(Scalar::fraction(1, 2), Scalar::fraction(1, 3), ArithOp::add),
            Scalar::fraction(5, 6));
}

TEST(Scalar, ImaginarySquareMatchesExpansion) {
  Scalar two_i = Scalar::parse("2i");
  // (a+bi)(c+di) = (ac-bd) + (ad+bc)i with a = c = 0, b = d = 2
  mpq_class a = 0, b = 2, c = 0, d = 2;
  Scalar expected(a * c - b * d, a * d + b * c);
  EXPECT_EQ(two_i * two_i, expected);
  EXPECT_EQ(two_i * two_i, Scalar(-4));
}

TEST(Scalar, ZeroAbsorbs) {
  std::mt19937 gen(7);
  for (int k = 0; k < 50; ++k) EXPECT_TRUE((random_scalar(gen, true) * Scalar(0)).is_zero());
}

TEST(Scalar, DivisionByZero) {
  EXPECT_FALSE(hnambu::scalar_arith(Scalar(3), Scalar(0), ArithOp::div).has_value());
  EXPECT_THROW(Scalar(3) / Scalar(0), hnambu::DivisionByZero);
  EXPECT_THROW(Scalar(0).inverse(), hnambu::DivisionByZero);
}

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(Scalar::fraction(2, 4), Scalar::fraction(1, 2));
  EXPECT_EQ(Scalar::fraction(1, -2).str(), "-1/2");
  EXPECT_EQ(Scalar::fraction(6, 3).str(), "2");
  EXPECT_EQ(Scalar(mpq_class(3), mpq_class(0)), Scalar(3));
  EXPECT_TRUE(Scalar(mpq_class(3), mpq_class(0)).is_rational());
}

TEST(Scalar, ParseAndPrint) {
  for (const char* text : {"0", "3", "-1/2", "2i", "-i", "i", "(1/2)i", "-(1/2)i", "1+2i", "1/3-(2/5)i"}) {
    EXPECT_EQ(Scalar::parse(text).str(), text) << text;
  }
  EXPECT_EQ(Scalar::parse("-2i"), Scalar(mpq_class(0), mpq_class(-2)));
  EXPECT_EQ(Scalar::parse("1 + 2i"), Scalar(mpq_class(1), mpq_class(2)));
  EXPECT_THROW(Scalar::parse(""), hnambu::ParseError);
  EXPECT_THROW(Scalar::parse("abc"), hnambu::ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), hnambu::Error);
}

TEST(Scalar, Powers) {
  Scalar i = Scalar::imaginary_unit();
  EXPECT_EQ(i.pow(2), Scalar(-1));
  EXPECT_EQ(i.pow(4), Scalar(1));
  EXPECT_EQ(Scalar(2).pow(-3), Scalar::fraction(1, 8));
  EXPECT_EQ(Scalar(5).pow(0), Scalar(1));
}

TEST(Scalar, FieldAxiomsRandomized) {
  std::mt19937 gen(20240611);
  for (int k = 0; k < 300; ++k) {
    bool gaussian = k % 2 == 0;
    Scalar a = random_scalar(gen, gaussian);
    Scalar b = random_scalar(gen, gaussian);
    Scalar c = random_scalar(gen, !gaussian);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Scalar(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(Scalar, TermFormatting) {
  using hnambu::format_term;
  using hnambu::join_terms;
  EXPECT_EQ(join_terms({}), "0");
  EXPECT_EQ(join_terms({format_term(Scalar(1), "e1"), format_term(Scalar(-2), "e2")}), "e1 - 2*e2");
  EXPECT_EQ(join_terms({format_term(Scalar::parse("1+2i"), "R3")}), "(1+2i)*R3");
  EXPECT_EQ(join_terms({format_term(Scalar(-1), "e1")}), "-e1");
}
