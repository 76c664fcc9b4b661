#include <gtest/gtest.h>

#include <random>

#include "hnambu/models/jacobian3.hpp"
#include "hnambu/models/samples.hpp"

using namespace hnambu;

namespace {

const std::vector<std::string> kX{"x1", "x2", "x3"};
const std::vector<std::string> kXK{"x1", "x2", "x3", "k4"};

MultiPoly X(const std::string& text) { return MultiPoly::parse(text, kX); }

MultiPoly random_poly(std::mt19937& gen) {
  MultiPoly p(3, kX);
  for (int t = 0; t < 3; ++t) {
    Exponents e(3, 0);
    for (int d = static_cast<int>(gen() % 4); d > 0; --d) ++e[gen() % 3];
    p.add_term(e, Scalar(static_cast<long>(gen() % 9) - 4));
  }
  return p;
}

GammaMap random_unimodular(std::mt19937& gen) {
  Scalar k1 = Scalar::fraction(1 + gen() % 3, 1);
  Scalar k2 = Scalar::fraction(1, 1 + gen() % 2);
  Scalar k3 = (k1 * k2).inverse();
  Triangular shape = gen() % 2 ? Triangular::upper : Triangular::lower;
  int a = static_cast<int>(gen() % 3), b = static_cast<int>(gen() % 2), c = static_cast<int>(gen() % 3);
  MultiPoly p1(3, kX);
  MultiPoly p2(3, kX);
  if (shape == Triangular::upper) {
    p1.add_term({0, a, b}, Scalar(static_cast<long>(gen() % 5) - 2));
    p2.add_term({0, 0, c}, Scalar(static_cast<long>(gen() % 5) - 2));
  } else {
    p1.add_term({b, a, 0}, Scalar(static_cast<long>(gen() % 5) - 2));
    p2.add_term({c, 0, 0}, Scalar(static_cast<long>(gen() % 5) - 2));
  }
  MultiPoly k4 = MultiPoly::constant(3, Scalar(static_cast<long>(gen() % 5) - 2)).with_names(kX);
  return GammaMap(shape, k1, k2, k3, k4, p1, p2);
}

}  // namespace

TEST(Jacobian3, BracketExamples) {
  EXPECT_EQ(jacobian3_bracket(X("x1"), X("x2"), X("x3")), X("1"));
  EXPECT_EQ(jacobian3_bracket(X("x1"), X("x2"), X("x3^3")), X("3*x3^2"));
  EXPECT_EQ(jacobian3_bracket(X("x3^3"), X("x1^2"), X("x2*x3")), X("6*x1*x3^3"));
}

TEST(Jacobian3, MonomialRuleMatchesDeterminant) {
  auto monomials = monomials_up_to(2);
  EXPECT_EQ(monomials.size(), 10u);
  EXPECT_EQ(monomials_up_to(3).size(), 20u);
  for (const auto& a : monomials)
    for (const auto& b : monomials)
      for (const auto& c : monomials) {
        MultiPoly expected = jacobian3_bracket(to_poly(basis(a)), to_poly(basis(b)), to_poly(basis(c)));
        EXPECT_EQ(to_poly(jacobian3_rule(a, b, c)), expected);
      }
}

TEST(Jacobian3, NambuLieOnDefaultSample) {
  auto a = jacobian3_algebra(Scalar(1));
  auto triples = jacobian_default_triples();
  auto tuples = jacobian_default_tuples();
  EXPECT_EQ(triples.size(), 8000u);
  EXPECT_EQ(tuples.front(), jacobian_k4_witness());
  EXPECT_EQ(tuples, jacobian_default_tuples());
  EXPECT_TRUE(check_skew_symmetry(a, std::span<const Triple<Monomial>>(triples)).passed());
  EXPECT_TRUE(check_hom_nambu_identity(a, std::span<const FiveTuple<Monomial>>(tuples)).passed());
}

TEST(Gamma, IdentityMap) {
  auto rho = gamma_endo(GammaMap::identity());
  for (const auto& m : monomials_up_to(3)) EXPECT_EQ(rho.on_basis(m), basis(m));
}

TEST(Gamma, TranslationMatchesSubstitution) {
  GammaMap gamma = GammaMap::translation_k4();
  auto rho = gamma_endo_symbolic(gamma);
  Element<Monomial, MultiPoly> image = rho(lift(to_element(X("3*x3^2")), parameter_unit(gamma)));
  MultiPoly joint(4, kXK);
  for (const auto& [m, c] : image.terms())
    for (const auto& [e, v] : c.terms()) joint.add_term({m.exponents[0], m.exponents[1], m.exponents[2], e[0]}, v);
  MultiPoly expected = MultiPoly::parse("3*x3^2", kXK).substitute(gamma.substitution_images());
  EXPECT_EQ(joint, expected);
  EXPECT_EQ(joint, MultiPoly::parse("3*(x3 + k4)^2", kXK));
}

TEST(Gamma, ChainRuleRandomized) {
  std::mt19937 gen(1234);
  for (int k = 0; k < 100; ++k) {
    GammaMap gamma = random_unimodular(gen);
    auto rho = gamma_endo(gamma);
    MultiPoly q1 = random_poly(gen), q2 = random_poly(gen), q3 = random_poly(gen);
    MultiPoly lhs = jacobian3_bracket(gamma.apply(q1), gamma.apply(q2), gamma.apply(q3));
    MultiPoly rhs = to_poly(rho(to_element(jacobian3_bracket(q1, q2, q3)))) * gamma.jacobian_determinant();
    EXPECT_EQ(lhs, rhs) << gamma.str();
    EXPECT_EQ(gamma.jacobian_determinant(), X("1"));
  }
}

TEST(Gamma, RejectsNonUnimodular) {
  EXPECT_THROW(parse_gamma("2,1,1,0,0,0"), InvalidArgument);
  EXPECT_THROW(parse_gamma("1,1,1,x3,0,0"), InvalidArgument);
  EXPECT_THROW(parse_gamma("1,1,1,0,x1,0"), InvalidArgument);
  EXPECT_THROW(parse_gamma("1,1,1,0,0,x2"), InvalidArgument);
  EXPECT_THROW(parse_gamma("1,1,1,0,0"), ParseError);
  EXPECT_NO_THROW(parse_gamma("2,1/2,1,3,x2^2,5*x3"));
}

TEST(Gamma, ParseAndShapes) {
  GammaMap g = parse_gamma("2,1/2,1,k4,x2^2,5*x3");
  EXPECT_EQ(g.parameter_count(), 1u);
  EXPECT_EQ(g.str(), "(x2^2 + 2*x1, 1/2*x2 + 5*x3, x3 + k4)");
  GammaMap lower = parse_gamma("1,1,1,7,x1*x2,x1", Triangular::lower);
  EXPECT_EQ(lower.str(), "(x1 + 7, x1 + x2, x1*x2 + x3)");
  EXPECT_EQ(lower.jacobian_determinant(), X("1"));
  EXPECT_THROW(parse_gamma("1,1,1,0,x3,0", Triangular::lower), InvalidArgument);
}

TEST(Gamma, TranslationCounterexample) {
  GammaMap gamma = GammaMap::translation_k4();
  auto base = jacobian3_algebra(parameter_unit(gamma));
  auto triples = jacobian_default_triples(2);
  auto twisted = twist_by_endomorphism(base, gamma_endo_symbolic(gamma), std::span<const Triple<Monomial>>(triples));
  auto sides = hom_nambu_sides(plain_nambu(twisted), jacobian_k4_witness());
  auto joint = [](const Element<Monomial, MultiPoly>& e) {
    MultiPoly out(4, kXK);
    for (const auto& [m, c] : e.terms())
      for (const auto& [x, v] : c.terms()) out.add_term({m.exponents[0], m.exponents[1], m.exponents[2], x[0]}, v);
    return out;
  };
  EXPECT_EQ(joint(sides.lhs), MultiPoly::parse("18*x1*(x3 + 2*k4)^2", kXK));
  EXPECT_EQ(joint(sides.rhs), MultiPoly::parse("6*x1*(x3 + k4)*(3*x3 + 5*k4)", kXK));
  auto tuples = jacobian_default_tuples();
  EXPECT_TRUE(check_hom_nambu_identity(twisted, std::span<const FiveTuple<Monomial>>(tuples)).passed());
}
