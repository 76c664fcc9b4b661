#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hnambu/checks.hpp"
#include "hnambu/keys.hpp"
#include "hnambu/multipoly.hpp"
#include "hnambu/series.hpp"

namespace hnambu {

/// det(dq_i/dx_j) for i, j in 1..3 by cofactor expansion. Variables beyond
/// the third are parameters and are not differentiated.
MultiPoly jacobian3_bracket(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3);

/// Bracket of three monomials: det(A) x^(a+b+c-(1,1,1)) with A the 3x3
/// matrix of their exponent vectors.
Element<Monomial, Scalar> jacobian3_rule(const Monomial& a, const Monomial& b, const Monomial& c);

template <CoefficientRing Ring>
TernaryHomAlgebra<Monomial, Ring> jacobian3_algebra(const Ring& one) {
  return nambu_algebra<Monomial, Ring>("jacobian3", "K[x1,x2,x3]", one, jacobian3_rule);
}

/// All monomials of total degree <= `degree`, in graded order.
std::vector<Monomial> monomials_up_to(int degree);

Element<Monomial, Scalar> to_element(const MultiPoly& p);
MultiPoly to_poly(const Element<Monomial, Scalar>& e);

/// Polynomial product on the monomial carrier.
template <CoefficientRing Ring>
Element<Monomial, Ring> poly_product(const Element<Monomial, Ring>& a, const Element<Monomial, Ring>& b) {
  Element<Monomial, Ring> out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Monomial m{{ka.exponents[0] + kb.exponents[0], ka.exponents[1] + kb.exponents[1],
                  ka.exponents[2] + kb.exponents[2]}};
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

/// Splits a polynomial in (x1, x2, x3, p_1, ..., p_P) into a combination of
/// x-monomials whose coefficients are `embed` applied to the parameter parts.
template <CoefficientRing Ring>
Element<Monomial, Ring> split_parameters(const MultiPoly& joint,
                                         const std::function<Ring(const MultiPoly&)>& embed) {
  if (joint.arity() < 3) throw ArityMismatch("joint polynomial needs at least x1, x2, x3");
  std::size_t params = joint.arity() - 3;
  std::vector<std::string> names = joint.names();
  std::vector<std::string> param_names(names.begin() + 3, names.end());
  std::map<Monomial, MultiPoly> grouped;
  for (const auto& [e, c] : joint.terms()) {
    Monomial m{{e[0], e[1], e[2]}};
    auto [it, inserted] = grouped.try_emplace(m, MultiPoly(params, param_names));
    it->second.add_term(Exponents(e.begin() + 3, e.end()), c);
  }
  Element<Monomial, Ring> out;
  for (const auto& [m, coeff] : grouped) out.add_term(m, embed(coeff));
  return out;
}

/// Substitution q(x) -> q(gamma) on the monomial carrier, memoized per
/// monomial. `gamma` holds three polynomials in the joint space
/// (x1, x2, x3, parameters); `embed` maps parameter polynomials into Ring.
template <CoefficientRing Ring>
LinearMap<Monomial, Ring> substitution_map(const std::vector<MultiPoly>& gamma,
                                           std::function<Ring(const MultiPoly&)> embed, const Ring& one,
                                           std::string name) {
  if (gamma.size() != 3) throw ArityMismatch("substitution needs three images");
  struct State {
    std::array<std::vector<Element<Monomial, Ring>>, 3> powers;
    std::map<Monomial, Element<Monomial, Ring>> images;
  };
  auto state = std::make_shared<State>();
  for (int v = 0; v < 3; ++v) {
    state->powers[v].push_back(Element<Monomial, Ring>::term(Monomial{}, one));
    state->powers[v].push_back(split_parameters<Ring>(gamma[v], embed));
  }
  auto image = [state](const Monomial& m) -> Element<Monomial, Ring> {
    auto it = state->images.find(m);
    if (it != state->images.end()) return it->second;
    for (int v = 0; v < 3; ++v) {
      if (m.exponents[v] < 0) throw InvalidArgument("negative exponent in substitution");
    }
    Element<Monomial, Ring> out;
    for (int v = 0; v < 3; ++v) {
      auto& pw = state->powers[v];
      while (static_cast<int>(pw.size()) <= m.exponents[v]) pw.push_back(poly_product(pw.back(), pw[1]));
      out = v == 0 ? pw[m.exponents[0]] : poly_product(out, pw[m.exponents[v]]);
    }
    state->images.emplace(m, out);
    return out;
  };
  return LinearMap<Monomial, Ring>(MapKind::substitution, std::move(name), image);
}

enum class Triangular { upper, lower };

/// Polynomial self-map gamma of K^3 with triangular, unimodular Jacobian.
///
/// Upper form: (k1 x1 + p1(x2, x3), k2 x2 + p2(x3), k3 x3 + k4).
/// Lower form: (k1 x1 + k4, k2 x2 + p2(x1), k3 x3 + p1(x1, x2)).
/// k4 and the coefficients of p1, p2 may involve parameter variables; every
/// polynomial lives in the joint space (x1, x2, x3, params...).
class GammaMap {
 public:
  GammaMap(Triangular shape, Scalar k1, Scalar k2, Scalar k3, MultiPoly k4, MultiPoly p1, MultiPoly p2);

  /// gamma = (x1, x2, x3 + k4) in the joint space (x1, x2, x3, k4).
  static GammaMap translation_k4();
  static GammaMap identity();

  Triangular shape() const { return shape_; }
  const std::array<Scalar, 3>& k() const { return k_; }
  const MultiPoly& k4() const { return k4_; }
  const MultiPoly& p1() const { return p1_; }
  const MultiPoly& p2() const { return p2_; }
  std::size_t parameter_count() const { return names_.size() - 3; }
  const std::vector<std::string>& names() const { return names_; }

  /// (gamma1, gamma2, gamma3) in the joint space.
  const std::vector<MultiPoly>& components() const { return gamma_; }
  /// Images for MultiPoly::substitute: gamma, then each parameter to itself.
  std::vector<MultiPoly> substitution_images() const;
  /// q(gamma) for q in the joint space.
  MultiPoly apply(const MultiPoly& q) const;
  /// det J(gamma) with respect to x1, x2, x3.
  MultiPoly jacobian_determinant() const;
  std::string str() const;

 private:
  Triangular shape_;
  std::array<Scalar, 3> k_;
  MultiPoly k4_, p1_, p2_;
  std::vector<std::string> names_;
  std::vector<MultiPoly> gamma_;
};

/// Parses "k1,k2,k3,k4,p1,p2", e.g. "1,1,1,k4,0,0" or "2,1/2,1,3,x2^2,5*x3".
/// A k4 field that is not a number becomes a symbolic parameter of that name.
GammaMap parse_gamma(std::string_view spec, Triangular shape = Triangular::upper);

/// rho_gamma on the monomial carrier over Scalar; requires no parameters.
LinearMap<Monomial, Scalar> gamma_endo(const GammaMap& gamma);
/// rho_gamma with parameters kept symbolic in the coefficient ring.
LinearMap<Monomial, MultiPoly> gamma_endo_symbolic(const GammaMap& gamma);
/// rho_gamma with parameter j read as the formal parameter t_{j+1}.
LinearMap<Monomial, TruncSeries> gamma_endo_series(const GammaMap& gamma, int order);

/// Parameter ring unit for gamma_endo_symbolic.
MultiPoly parameter_unit(const GammaMap& gamma);

}  // namespace hnambu
