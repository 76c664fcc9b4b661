#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnambu/errors.hpp"

namespace hnambu {

/// Exact element of Q(i): a + b*i with a, b rational.
///
/// A value with zero imaginary part is an ordinary rational; there is no
/// separate tag, so such a value compares equal to the same rational
/// regardless of how it was produced.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T value) : re_(static_cast<long>(value)) {}  // NOLINT: implicit by intent
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar fraction(long num, long den);
  static Scalar imaginary_unit();
  /// Accepts "3", "-1/2", "2i", "-i", "(1/2)i", "1+2i", "1/3-(2/5)i".
  static Scalar parse(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_rational() const { return sgn(im_) == 0; }
  /// True for values printed with a leading minus: negative rationals and
  /// negative pure imaginaries.
  bool is_negative() const;

  Scalar conjugate() const { return Scalar(re_, -im_); }
  /// Throws DivisionByZero for zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::string to_string(const Scalar& s) { return s.str(); }

enum class ArithOp { add, sub, mul, div };

/// Field operation selected at run time. Division by zero yields nullopt.
std::optional<Scalar> scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Printed form of `coeff * rest` where `rest` is a nonempty monomial or
/// basis name. Returns the sign separately so callers can join terms with
/// " + " / " - ".
struct SignedTerm {
  bool negative;
  std::string body;
};
SignedTerm format_term(const Scalar& coeff, const std::string& rest);
/// Joins signed terms as "a + b - c"; empty input prints "0".
std::string join_terms(const std::vector<SignedTerm>& terms);

}  // namespace hnambu
