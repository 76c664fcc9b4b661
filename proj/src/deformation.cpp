#include "hnambu/deformation.hpp"

#include "hnambu/models/cross4.hpp"
#include "hnambu/models/jacobian3.hpp"
#include "hnambu/models/virasoro_witt.hpp"

namespace hnambu {

std::vector<MultiIndex> multi_indices(std::size_t arity, int order) {
  const auto layout = SeriesLayout::get(arity, order);
  std::vector<MultiIndex> out;
  out.reserve(layout->size());
  for (std::uint32_t k = 0; k < layout->size(); ++k) out.push_back(MultiIndex{layout->exponents(k)});
  return out;
}

DeformationFamily<Generator> build_qvw_deformation(int order, const Scalar& z, bool allow_any_z) {
  const Scalar two_i = Scalar::imaginary_unit() * Scalar(2);
  if (!allow_any_z && z != two_i && z != -two_i) {
    throw InvalidArgument("z = " + z.str() + " does not give a Nambu-Lie base (need z = 2i or -2i)");
  }
  auto rho = rho_q_series(order);
  TruncSeries one = TruncSeries::constant(1, order, 1);
  return DeformationFamily<Generator>(
      "vw(z=" + z.str() + ")", "W", {{"t", "q - 1"}}, order,
      [rho, z, one](const Generator& a, const Generator& b, const Generator& c) {
        return rho(lift(vw_rule(a, b, c, z), one));
      },
      [rho](const Generator& g) { return rho.on_basis(g); }, [rho](const Generator& g) { return rho.on_basis(g); });
}

DeformationFamily<Coord> build_cross_deformation(int order) {
  auto rho = rho_theta_series(order).as_map("rho_theta");
  TruncSeries one = TruncSeries::constant(2, order, 1);
  return DeformationFamily<Coord>(
      "cross4", "R4", {{"t1", "theta1"}, {"t2", "theta2"}}, order,
      [rho, one](const Coord& a, const Coord& b, const Coord& c) { return rho(lift(cross4_rule(a, b, c), one)); },
      [rho](const Coord& k) { return rho.on_basis(k); }, [rho](const Coord& k) { return rho.on_basis(k); });
}

DeformationFamily<Monomial> build_jacobian_deformation(const JacobianShape& shape, const std::array<Scalar, 3>& k,
                                                       int order) {
  if (shape.p1_degree < 0 || shape.p2_degree < 0) throw InvalidArgument("negative degree bound");
  const int lowest = shape.include_constants ? 0 : 1;
  // p1 monomials x2^a x3^b and p2 monomials x3^b, graded
  std::vector<std::array<int, 2>> p1_terms;
  for (int d = lowest; d <= shape.p1_degree; ++d)
    for (int a = d; a >= 0; --a) p1_terms.push_back({a, d - a});
  std::vector<int> p2_terms;
  for (int d = lowest; d <= shape.p2_degree; ++d) p2_terms.push_back(d);

  std::vector<Parameter> params{{"t1", "k4"}};
  auto monomial_name = [](int e2, int e3) {
    Monomial m{{0, e2, e3}};
    return to_string(m);
  };
  for (const auto& [a, b] : p1_terms) {
    params.push_back({"t" + std::to_string(params.size() + 1), "coefficient of " + monomial_name(a, b) + " in p1"});
  }
  for (int b : p2_terms) {
    params.push_back({"t" + std::to_string(params.size() + 1), "coefficient of " + monomial_name(0, b) + " in p2"});
  }

  std::vector<std::string> names{"x1", "x2", "x3"};
  for (const auto& p : params) names.push_back(p.name);
  const std::size_t arity = names.size();
  auto var = [&](std::size_t v) { return MultiPoly::variable(arity, v).with_names(names); };
  MultiPoly k4 = var(3);
  MultiPoly p1(arity, names);
  MultiPoly p2(arity, names);
  std::size_t next = 4;
  for (const auto& [a, b] : p1_terms) p1 += var(next++) * var(1).pow(a) * var(2).pow(b);
  for (int b : p2_terms) p2 += var(next++) * var(2).pow(b);
  GammaMap gamma(Triangular::upper, k[0], k[1], k[2], k4, p1, p2);

  auto rho = gamma_endo_series(gamma, order);
  TruncSeries one = TruncSeries::constant(params.size(), order, 1);
  std::string base = "jacobian3";
  if (!(k[0].is_one() && k[1].is_one() && k[2].is_one())) {
    base += "^diag(" + k[0].str() + "," + k[1].str() + "," + k[2].str() + ")";
  }
  return DeformationFamily<Monomial>(
      base, "K[x1,x2,x3]", params, order,
      [rho, one](const Monomial& a, const Monomial& b, const Monomial& c) {
        return rho(lift(jacobian3_rule(a, b, c), one));
      },
      [rho](const Monomial& m) { return rho.on_basis(m); }, [rho](const Monomial& m) { return rho.on_basis(m); });
}

}  // namespace hnambu
