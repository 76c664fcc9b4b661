#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnambu/scalar.hpp"

namespace hnambu {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

/// Sparse multivariate polynomial with exact coefficients.
///
/// Variables flagged in the Laurent mask may carry negative exponents; all
/// other exponents are natural numbers. No zero coefficient is ever stored,
/// so two polynomials are equal exactly when their term maps are.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Scalar, MonomialOrder>;

  explicit MultiPoly(std::size_t arity = 0);
  MultiPoly(std::size_t arity, std::vector<std::string> names, std::uint32_t laurent_mask = 0);

  static MultiPoly constant(std::size_t arity, const Scalar& value);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly monomial(std::size_t arity, Exponents exponents, const Scalar& coeff);
  /// Parses sums of products such as "18*x1*x3^2 - 2*k4 + (1/2)*x2".
  /// Identifiers resolve against `names`; a lone `i` not in `names` is the
  /// imaginary unit. Negative exponents are accepted on variables listed
  /// in `laurent_mask`.
  static MultiPoly parse(std::string_view text, const std::vector<std::string>& names,
                         std::uint32_t laurent_mask = 0);

  std::size_t arity() const { return arity_; }
  std::uint32_t laurent_mask() const { return laurent_mask_; }
  bool is_laurent(std::size_t var) const { return (laurent_mask_ >> var) & 1U; }
  std::vector<std::string> names() const;
  MultiPoly with_names(std::vector<std::string> names) const;
  MultiPoly with_laurent_mask(std::uint32_t mask) const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar coefficient(const Exponents& e) const;
  int total_degree() const;
  bool has_negative_exponents() const;

  /// Adds `coeff * x^e`, dropping the entry if it cancels.
  void add_term(const Exponents& e, const Scalar& coeff);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Scalar& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned exponent) const;

  /// Formal partial derivative in variable `var`.
  MultiPoly partial(std::size_t var) const;
  /// Composite p(images[0], ..., images[n-1]). All images share one arity,
  /// which becomes the arity of the result.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Equality of coefficients; variable names are presentation only.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Highest degree first, e.g. "x1^2 - 2*x1*x2 + 3".
  std::string str() const;
  std::string monomial_str(const Exponents& e) const;

 private:
  void check_compatible(const MultiPoly& other) const;
  void adopt_metadata(const MultiPoly& other);

  std::size_t arity_ = 0;
  std::shared_ptr<const std::vector<std::string>> names_;
  std::uint32_t laurent_mask_ = 0;
  Terms terms_;
};

inline std::string to_string(const MultiPoly& p) { return p.str(); }

/// Groups the terms of `p` by the exponents of its first `leading`
/// variables; each value is the coefficient polynomial in the others.
std::map<Exponents, MultiPoly, MonomialOrder> split_leading(const MultiPoly& p, std::size_t leading);

/// Monic greatest common divisor of two univariate polynomials; zero when
/// both are zero.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::string_view stem, std::size_t count);

}  // namespace hnambu
