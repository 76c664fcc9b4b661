#include <gtest/gtest.h>

#include "hnambu/deformation.hpp"
#include "hnambu/deformation_io.hpp"
#include "hnambu/models/cross4.hpp"
#include "hnambu/models/jacobian3.hpp"
#include "hnambu/models/samples.hpp"
#include "hnambu/models/virasoro_witt.hpp"

using namespace hnambu;

namespace {

Generator Q(int n) { return Generator{GenKind::Q, n}; }
Generator R(int n) { return Generator{GenKind::R, n}; }
const Scalar kTwoI = Scalar::imaginary_unit() * Scalar(2);

MultiIndex idx(std::initializer_list<int> e) { return MultiIndex{Exponents(e)}; }

long binomial(int n, int k) {
  long out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - j + 1) / j;
  return out;
}

template <class Key>
void expect_same_brackets(const TernaryHomAlgebra<Key, Scalar>& a, const TernaryHomAlgebra<Key, Scalar>& b,
                          const std::vector<Key>& keys) {
  for (const auto& x : keys) {
    EXPECT_EQ(a.alpha.on_basis(x), b.alpha.on_basis(x));
    EXPECT_EQ(a.beta.on_basis(x), b.beta.on_basis(x));
    for (const auto& y : keys)
      for (const auto& z : keys) EXPECT_EQ(a.rule(x, y, z), b.rule(x, y, z));
  }
}

}  // namespace

TEST(Deformation, MultiIndices) {
  auto all = multi_indices(2, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), idx({0, 0}));
  EXPECT_EQ(multi_indices(3, 4).size(), 35u);
  EXPECT_EQ(idx({0, 2, 1}).str(), "0,2,1");
  EXPECT_EQ(MultiIndex::parse("0,2,1"), idx({0, 2, 1}));
}

TEST(Deformation, DegreeZeroIsBase) {
  expect_same_brackets(build_qvw_deformation(2, kTwoI).degree_zero(), vw_algebra(kTwoI, Scalar(1)),
                       vw_generators(-2, 2));
  expect_same_brackets(build_cross_deformation(3).degree_zero(), cross4_algebra(Scalar(1)), cross4_basis());
  expect_same_brackets(build_jacobian_deformation({}, {1, 1, 1}, 2).degree_zero(), jacobian3_algebra(Scalar(1)),
                       monomials_up_to(2));
}

TEST(Deformation, QvwComponents) {
  auto family = build_qvw_deformation(2, kTwoI);
  auto expect_alpha = [&](int i, long c) {
    EXPECT_EQ(family.alpha_component(idx({i}), Q(-1)), basis(Q(-1)) * Scalar(c));
  };
  expect_alpha(0, 1);
  expect_alpha(1, -1);
  expect_alpha(2, 1);
  // [Q0, Q1, R0] = -Q1, so its t coefficient is -Q1 as well
  EXPECT_EQ(family.bracket_component(idx({1}), Q(0), Q(1), R(0)), -basis(Q(1)));

  auto six = build_qvw_deformation(6, kTwoI);
  for (int i = 0; i <= 6; ++i) {
    EXPECT_EQ(six.bracket_component(idx({i}), Q(1), Q(2), Q(3)), basis(R(6)) * Scalar(-2 * binomial(6, i)));
  }
}

TEST(Deformation, QvwRefusesNonNambuBase) {
  EXPECT_THROW(build_qvw_deformation(2, Scalar(1)), InvalidArgument);
  EXPECT_NO_THROW(build_qvw_deformation(2, Scalar(1), true));
  EXPECT_NO_THROW(build_qvw_deformation(2, -kTwoI));
}

TEST(Deformation, QvwPassesLowOrder) {
  auto family = build_qvw_deformation(2, kTwoI);
  auto tuples = vw_default_tuples(-1, 1);
  auto triples = vw_default_triples(-1, 1);
  auto report = verify_deformation(family, std::span<const FiveTuple<Generator>>(tuples),
                                   std::span<const Triple<Generator>>(triples));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.failures_by_degree.size(), 3u);
}

TEST(Deformation, CrossComponents) {
  auto family = build_cross_deformation(3);
  EXPECT_EQ(family.alpha_component(idx({0, 0}), Coord{1}), basis(Coord{1}));
  EXPECT_EQ(family.alpha_component(idx({1, 0}), Coord{1}), basis(Coord{3}));
  EXPECT_EQ(family.alpha_component(idx({2, 0}), Coord{1}), basis(Coord{1}) * Scalar::fraction(-1, 2));
  EXPECT_EQ(family.alpha_component(idx({3, 0}), Coord{1}), basis(Coord{3}) * Scalar::fraction(-1, 6));
  EXPECT_TRUE(family.alpha_component(idx({0, 1}), Coord{1}).is_zero());

  auto first = build_cross_deformation(1);
  EXPECT_EQ(first.bracket_component(idx({0, 0}), Coord{1}, Coord{2}, Coord{3}), basis(Coord{4}));
  EXPECT_EQ(first.bracket_component(idx({0, 1}), Coord{1}, Coord{2}, Coord{3}), -basis(Coord{2}));
  EXPECT_TRUE(first.bracket_component(idx({1, 0}), Coord{1}, Coord{2}, Coord{3}).is_zero());
}

TEST(Deformation, JacobianSingleParameter) {
  JacobianShape shape{0, 0, false};
  auto family = build_jacobian_deformation(shape, {1, 1, 1}, 3);
  ASSERT_EQ(family.arity(), 1u);
  EXPECT_EQ(family.parameters().front().meaning, "k4");
  Monomial x1{{1, 0, 0}}, x2{{0, 1, 0}}, x3c{{0, 0, 3}};
  // 3 (x3 + t)^2
  EXPECT_EQ(family.bracket_component(idx({0}), x1, x2, x3c), basis(Monomial{{0, 0, 2}}) * Scalar(3));
  EXPECT_EQ(family.bracket_component(idx({1}), x1, x2, x3c), basis(Monomial{{0, 0, 1}}) * Scalar(6));
  EXPECT_EQ(family.bracket_component(idx({2}), x1, x2, x3c), basis(Monomial{{0, 0, 0}}) * Scalar(3));
  EXPECT_TRUE(family.bracket_component(idx({3}), x1, x2, x3c).is_zero());
}

TEST(Deformation, JacobianDefaultParameters) {
  auto family = build_jacobian_deformation({}, {1, 1, 1}, 1);
  ASSERT_EQ(family.arity(), 4u);
  std::vector<std::string> meanings;
  for (const auto& p : family.parameters()) meanings.push_back(p.meaning);
  EXPECT_EQ(meanings, (std::vector<std::string>{"k4", "coefficient of x2 in p1", "coefficient of x3 in p1",
                                                "coefficient of x3 in p2"}));
  EXPECT_EQ(family.parameter_names(), (std::vector<std::string>{"t1", "t2", "t3", "t4"}));
}

TEST(Deformation, CorruptedFamiliesAreCaught) {
  // bracket twisted by rho_q but alpha = beta = identity
  auto rho = rho_q_series(2);
  TruncSeries one = TruncSeries::constant(1, 2, 1);
  DeformationFamily<Generator> bad(
      "vw", "W", {{"t", "q - 1"}}, 2,
      [rho, one](const Generator& a, const Generator& b, const Generator& c) {
        return rho(lift(vw_rule(a, b, c, kTwoI), one));
      },
      [one](const Generator& g) { return lift(basis(g), one); },
      [one](const Generator& g) { return lift(basis(g), one); });
  auto tuples = vw_default_tuples(-1, 1);
  auto report = verify_deformation(bad, std::span<const FiveTuple<Generator>>(tuples), {});
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.failures_by_degree[0], 0u);
  EXPECT_GT(report.failures_by_degree[1], 0u);

  // alpha and beta carry an extra t^2 shift Q_n -> R_n
  DeformationFamily<Generator> shifted(
      "vw", "W", {{"t", "q - 1"}}, 2,
      [one](const Generator& a, const Generator& b, const Generator& c) {
        return lift(vw_rule(a, b, c, kTwoI), one);
      },
      [one](const Generator& g) {
        auto out = lift(basis(g), one);
        if (g.kind == GenKind::Q) out.add_term(R(g.index), TruncSeries::monomial(idx({2}), Scalar(1), 2));
        return out;
      },
      [one](const Generator& g) { return lift(basis(g), one); });
  report = verify_deformation(shifted, std::span<const FiveTuple<Generator>>(tuples), {});
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.failures_by_degree[0], 0u);
  EXPECT_EQ(report.failures_by_degree[1], 0u);
  EXPECT_GT(report.failures_by_degree[2], 0u);
}

TEST(Deformation, TruncationIsMonotone) {
  auto high = build_qvw_deformation(4, kTwoI).truncated(2);
  auto low = build_qvw_deformation(2, kTwoI);
  EXPECT_EQ(high.order(), 2);
  for (const auto& i : low.indices()) {
    EXPECT_EQ(high.bracket_component(i, Q(1), Q(-2), R(2)), low.bracket_component(i, Q(1), Q(-2), R(2)));
    EXPECT_EQ(high.alpha_component(i, Q(-2)), low.alpha_component(i, Q(-2)));
  }
  EXPECT_THROW(low.truncated(3), InvalidArgument);
}

TEST(Deformation, ComponentsStayGraded) {
  auto family = build_qvw_deformation(3, kTwoI);
  auto gens = vw_generators(-1, 1);
  for (const auto& i : family.indices())
    for (const auto& a : gens)
      for (const auto& b : gens)
        for (const auto& c : gens) {
          auto component = family.bracket_component(i, a, b, c);
          for (const auto& [g, coeff] : component.terms()) EXPECT_EQ(g.index, a.index + b.index + c.index);
        }
}

TEST(DeformationIo, RoundTripIsByteExact) {
  auto family = build_cross_deformation(3);
  auto support = cross4_basis();
  std::string text = save_family(family, std::span<const Coord>(support));
  EXPECT_EQ(text.rfind("hnambu-deformation 1\nbase cross4\ncarrier R4\norder 3\nparameters 2\n", 0), 0u);
  auto loaded = load_family<Coord>(text);
  EXPECT_EQ(save_family(loaded, std::span<const Coord>(support)), text);
  EXPECT_EQ(loaded.parameters(), family.parameters());
  for (const auto& i : family.indices()) {
    EXPECT_EQ(loaded.bracket_component(i, Coord{1}, Coord{2}, Coord{4}),
              family.bracket_component(i, Coord{1}, Coord{2}, Coord{4}));
  }

  auto qvw = build_qvw_deformation(2, kTwoI);
  auto gens = vw_generators(-1, 1);
  std::string qtext = save_family(qvw, std::span<const Generator>(gens));
  EXPECT_EQ(save_family(load_family<Generator>(qtext), std::span<const Generator>(gens)), qtext);

  auto jac = build_jacobian_deformation({}, {1, 1, 1}, 1);
  auto monomials = monomials_up_to(1);
  std::string jtext = save_family(jac, std::span<const Monomial>(monomials));
  EXPECT_EQ(save_family(load_family<Monomial>(jtext), std::span<const Monomial>(monomials)), jtext);
}

TEST(DeformationIo, LoadedFamilyStillVerifies) {
  auto family = build_qvw_deformation(2, kTwoI);
  auto gens = vw_generators(-1, 1);
  auto loaded = load_family<Generator>(save_family(family, std::span<const Generator>(gens)));
  auto tuples = vw_default_tuples(-1, 1);
  // tuples whose brackets leave the support cannot be evaluated
  std::vector<FiveTuple<Generator>> inside;
  for (const auto& t : tuples) {
    auto n = [&](int k) { return t[k].terms().begin()->first.index; };
    auto fits = [](int v) { return std::abs(v) <= 1; };
    if (fits(n(2) + n(3) + n(4)) && fits(n(0) + n(1) + n(2)) && fits(n(0) + n(1) + n(3)) && fits(n(0) + n(1) + n(4)))
      inside.push_back(t);
  }
  ASSERT_FALSE(inside.empty());
  EXPECT_TRUE(verify_deformation(loaded, std::span<const FiveTuple<Generator>>(inside), {}).passed());
}

TEST(DeformationIo, Errors) {
  auto family = build_cross_deformation(1);
  auto support = std::vector<Coord>{Coord{1}, Coord{2}, Coord{3}};
  auto loaded = load_family<Coord>(save_family(family, std::span<const Coord>(support)));
  EXPECT_THROW(loaded.bracket_component(idx({0, 0}), Coord{1}, Coord{2}, Coord{4}), OutOfSupport);
  EXPECT_THROW(loaded.alpha_component(idx({0, 0}), Coord{4}), OutOfSupport);
  EXPECT_THROW(load_family<Coord>("hnambu-deformation 2\n"), ParseError);
  EXPECT_THROW(load_family<Coord>(""), ParseError);
  std::string text = save_family(family, std::span<const Coord>(support));
  EXPECT_THROW(load_family<Coord>(text.substr(0, text.size() - 4)), ParseError);
  std::string bad = text;
  bad.replace(bad.find("component"), 9, "compnent");
  EXPECT_THROW(load_family<Coord>(bad), ParseError);
}
