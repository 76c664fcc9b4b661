#include "hnambu/trig.hpp"

namespace hnambu {

namespace {

constexpr std::size_t kCos[2] = {0, 2};
constexpr std::size_t kSin[2] = {1, 3};

MultiPoly empty_trig_poly() { return MultiPoly(TrigRingElem::kArity, trig_variable_names()); }

// (1 - c^2)^m expanded: sum_j binom(m, j) (-1)^j c^{2j}
void add_reduced_monomial(MultiPoly& out, Exponents e, const Scalar& coeff) {
  MultiPoly term = empty_trig_poly();
  term.add_term(Exponents(TrigRingElem::kArity, 0), coeff);
  for (int k = 0; k < 2; ++k) {
    int s_exp = e[kSin[k]];
    if (s_exp < 2) continue;
    int half = s_exp / 2;
    e[kSin[k]] = s_exp % 2;
    MultiPoly factor = empty_trig_poly();
    mpz_class binom = 1;
    for (int j = 0; j <= half; ++j) {
      Exponents c(TrigRingElem::kArity, 0);
      c[kCos[k]] = 2 * j;
      factor.add_term(c, Scalar(mpq_class(j % 2 == 0 ? binom : mpz_class(-binom))));
      binom = binom * (half - j) / (j + 1);
    }
    term = term * factor;
  }
  out += term * MultiPoly::monomial(TrigRingElem::kArity, e, 1);
}

}  // namespace

const std::vector<std::string>& trig_variable_names() {
  static const std::vector<std::string> names{"c1", "s1", "c2", "s2"};
  return names;
}

TrigRingElem trig_reduce(const MultiPoly& poly) {
  if (poly.arity() != TrigRingElem::kArity) {
    throw ArityMismatch("trigonometric reduction needs a polynomial in c1, s1, c2, s2");
  }
  if (poly.has_negative_exponents()) throw InvalidArgument("trigonometric reduction of a Laurent polynomial");
  MultiPoly out = empty_trig_poly();
  for (const auto& [e, c] : poly.terms()) {
    if (e[kSin[0]] < 2 && e[kSin[1]] < 2) {
      out.add_term(e, c);
    } else {
      add_reduced_monomial(out, e, c);
    }
  }
  return TrigRingElem(out);
}

TrigRingElem::TrigRingElem() : poly_(empty_trig_poly()) {}

TrigRingElem::TrigRingElem(const Scalar& value) : poly_(empty_trig_poly()) {
  poly_.add_term(Exponents(kArity, 0), value);
}

TrigRingElem::TrigRingElem(const MultiPoly& poly) : poly_(poly.with_names(trig_variable_names())) {
  for (const auto& [e, c] : poly_.terms()) {
    if (e[kSin[0]] >= 2 || e[kSin[1]] >= 2) {
      poly_ = trig_reduce(poly_).poly_;
      return;
    }
  }
}

TrigRingElem TrigRingElem::cos(int k) {
  if (k != 1 && k != 2) throw InvalidArgument("angle index must be 1 or 2");
  return TrigRingElem(MultiPoly::variable(kArity, kCos[k - 1]));
}

TrigRingElem TrigRingElem::sin(int k) {
  if (k != 1 && k != 2) throw InvalidArgument("angle index must be 1 or 2");
  return TrigRingElem(MultiPoly::variable(kArity, kSin[k - 1]));
}

TrigRingElem& TrigRingElem::operator+=(const TrigRingElem& rhs) {
  poly_ += rhs.poly_;
  return *this;
}

TrigRingElem& TrigRingElem::operator-=(const TrigRingElem& rhs) {
  poly_ -= rhs.poly_;
  return *this;
}

TrigRingElem operator*(const TrigRingElem& a, const TrigRingElem& b) {
  return TrigRingElem(a.poly_ * b.poly_);
}

TrigRingElem operator*(TrigRingElem a, const Scalar& s) {
  a.poly_ *= s;
  return a;
}

TrigRingElem TrigRingElem::operator-() const {
  TrigRingElem out = *this;
  out.poly_ = -poly_;
  return out;
}

TrigRingElem TrigRingElem::negate_angles() const {
  MultiPoly flipped = empty_trig_poly();
  for (const auto& [e, c] : poly_.terms()) {
    int odd = e[kSin[0]] + e[kSin[1]];
    flipped.add_term(e, odd % 2 == 0 ? c : -c);
  }
  return TrigRingElem(flipped);
}

Scalar TrigRingElem::evaluate(const Scalar& c1, const Scalar& s1, const Scalar& c2,
                              const Scalar& s2) const {
  std::vector<MultiPoly> point{MultiPoly::constant(0, c1), MultiPoly::constant(0, s1),
                               MultiPoly::constant(0, c2), MultiPoly::constant(0, s2)};
  MultiPoly value = poly_.substitute(point);
  return value.coefficient(Exponents{});
}

}  // namespace hnambu
