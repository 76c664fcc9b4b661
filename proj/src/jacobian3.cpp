#include "hnambu/models/jacobian3.hpp"

#include <regex>
#include <sstream>

namespace hnambu {

MultiPoly jacobian3_bracket(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3) {
  if (q1.arity() < 3) throw ArityMismatch("Jacobian bracket needs polynomials in at least x1, x2, x3");
  if (q2.arity() != q1.arity() || q3.arity() != q1.arity()) throw ArityMismatch("Jacobian bracket arity mismatch");
  std::array<std::array<MultiPoly, 3>, 3> j;
  const std::array<const MultiPoly*, 3> q{&q1, &q2, &q3};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) j[r][c] = q[r]->partial(c);
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

Element<Monomial, Scalar> jacobian3_rule(const Monomial& a, const Monomial& b, const Monomial& c) {
  const auto& x = a.exponents;
  const auto& y = b.exponents;
  const auto& z = c.exponents;
  long det = static_cast<long>(x[0]) * (y[1] * z[2] - y[2] * z[1]) - static_cast<long>(x[1]) * (y[0] * z[2] - y[2] * z[0]) +
             static_cast<long>(x[2]) * (y[0] * z[1] - y[1] * z[0]);
  if (det == 0) return {};
  Monomial m{{x[0] + y[0] + z[0] - 1, x[1] + y[1] + z[1] - 1, x[2] + y[2] + z[2] - 1}};
  return Element<Monomial, Scalar>::term(m, Scalar(det));
}

std::vector<Monomial> monomials_up_to(int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    for (int a = d; a >= 0; --a) {
      for (int b = d - a; b >= 0; --b) out.push_back(Monomial{{a, b, d - a - b}});
    }
  }
  return out;
}

Element<Monomial, Scalar> to_element(const MultiPoly& p) {
  if (p.arity() != 3) throw ArityMismatch("expected a polynomial in x1, x2, x3");
  Element<Monomial, Scalar> out;
  for (const auto& [e, c] : p.terms()) out.add_term(to_monomial(e), c);
  return out;
}

MultiPoly to_poly(const Element<Monomial, Scalar>& e) {
  MultiPoly p(3, {"x1", "x2", "x3"});
  for (const auto& [m, c] : e.terms()) p.add_term(to_exponents(m), c);
  return p;
}

namespace {

bool depends_on(const MultiPoly& p, std::size_t var) {
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != 0) return true;
  }
  return false;
}

}  // namespace

GammaMap::GammaMap(Triangular shape, Scalar k1, Scalar k2, Scalar k3, MultiPoly k4, MultiPoly p1, MultiPoly p2)
    : shape_(shape), k_{std::move(k1), std::move(k2), std::move(k3)} {
  if (k_[0] * k_[1] * k_[2] != Scalar(1)) {
    throw InvalidArgument("non-unimodular gamma: k1*k2*k3 = " + (k_[0] * k_[1] * k_[2]).str() + ", need 1");
  }
  std::size_t arity = k4.arity();
  if (arity < 3 || p1.arity() != arity || p2.arity() != arity) {
    throw ArityMismatch("k4, p1, p2 must share one joint space (x1, x2, x3, params...)");
  }
  names_ = k4.names();
  k4_ = k4.with_names(names_);
  p1_ = p1.with_names(names_);
  p2_ = p2.with_names(names_);
  bool ok = !depends_on(k4_, 0) && !depends_on(k4_, 1) && !depends_on(k4_, 2);
  if (shape == Triangular::upper) {
    ok = ok && !depends_on(p1_, 0) && !depends_on(p2_, 0) && !depends_on(p2_, 1);
  } else {
    ok = ok && !depends_on(p1_, 2) && !depends_on(p2_, 1) && !depends_on(p2_, 2);
  }
  if (!ok) throw InvalidArgument("gamma polynomials violate the triangular shape");
  auto x = [&](std::size_t v) { return MultiPoly::variable(arity, v).with_names(names_); };
  if (shape == Triangular::upper) {
    gamma_ = {x(0) * k_[0] + p1_, x(1) * k_[1] + p2_, x(2) * k_[2] + k4_};
  } else {
    gamma_ = {x(0) * k_[0] + k4_, x(1) * k_[1] + p2_, x(2) * k_[2] + p1_};
  }
}

GammaMap GammaMap::translation_k4() {
  std::vector<std::string> names{"x1", "x2", "x3", "k4"};
  return GammaMap(Triangular::upper, 1, 1, 1, MultiPoly::variable(4, 3).with_names(names),
                  MultiPoly(4, names), MultiPoly(4, names));
}

GammaMap GammaMap::identity() {
  std::vector<std::string> names{"x1", "x2", "x3"};
  return GammaMap(Triangular::upper, 1, 1, 1, MultiPoly(3, names), MultiPoly(3, names), MultiPoly(3, names));
}

std::vector<MultiPoly> GammaMap::substitution_images() const {
  std::vector<MultiPoly> images = gamma_;
  for (std::size_t v = 3; v < names_.size(); ++v) {
    images.push_back(MultiPoly::variable(names_.size(), v).with_names(names_));
  }
  return images;
}

MultiPoly GammaMap::apply(const MultiPoly& q) const { return q.substitute(substitution_images()); }

MultiPoly GammaMap::jacobian_determinant() const { return jacobian3_bracket(gamma_[0], gamma_[1], gamma_[2]); }

std::string GammaMap::str() const {
  return "(" + gamma_[0].str() + ", " + gamma_[1].str() + ", " + gamma_[2].str() + ")";
}

GammaMap parse_gamma(std::string_view spec, Triangular shape) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (fields.size() != 6) throw ParseError("gamma spec needs 6 comma-separated fields k1,k2,k3,k4,p1,p2");
  std::vector<std::string> names{"x1", "x2", "x3"};
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  for (int f = 3; f < 6; ++f) {
    for (auto it = std::sregex_iterator(fields[f].begin(), fields[f].end(), ident); it != std::sregex_iterator();
         ++it) {
      std::string name = it->str();
      if (name == "i") continue;
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
  }
  return GammaMap(shape, Scalar::parse(fields[0]), Scalar::parse(fields[1]), Scalar::parse(fields[2]),
                  MultiPoly::parse(fields[3], names), MultiPoly::parse(fields[4], names),
                  MultiPoly::parse(fields[5], names));
}

namespace {

void require_unimodular(const GammaMap& gamma) {
  MultiPoly det = gamma.jacobian_determinant();
  if (det != MultiPoly::constant(det.arity(), 1)) {
    throw InvalidArgument("non-unimodular gamma: det J = " + det.str());
  }
}

}  // namespace

LinearMap<Monomial, Scalar> gamma_endo(const GammaMap& gamma) {
  if (gamma.parameter_count() != 0) throw InvalidArgument("gamma has symbolic parameters; use a parameter ring");
  require_unimodular(gamma);
  std::function<Scalar(const MultiPoly&)> embed = [](const MultiPoly& p) { return p.coefficient(Exponents{}); };
  return substitution_map<Scalar>(gamma.components(), embed, Scalar(1), "rho_gamma");
}

MultiPoly parameter_unit(const GammaMap& gamma) {
  std::vector<std::string> names(gamma.names().begin() + 3, gamma.names().end());
  return MultiPoly::constant(names.size(), 1).with_names(names);
}

LinearMap<Monomial, MultiPoly> gamma_endo_symbolic(const GammaMap& gamma) {
  require_unimodular(gamma);
  std::function<MultiPoly(const MultiPoly&)> embed = [](const MultiPoly& p) { return p; };
  return substitution_map<MultiPoly>(gamma.components(), embed, parameter_unit(gamma), "rho_gamma");
}

LinearMap<Monomial, TruncSeries> gamma_endo_series(const GammaMap& gamma, int order) {
  require_unimodular(gamma);
  std::function<TruncSeries(const MultiPoly&)> embed = [order](const MultiPoly& p) {
    return TruncSeries::from_poly(p, order);
  };
  return substitution_map<TruncSeries>(gamma.components(), embed,
                                       TruncSeries::constant(gamma.parameter_count(), order, 1), "rho_gamma");
}

}  // namespace hnambu
