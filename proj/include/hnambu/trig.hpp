#pragma once

#include <string>

#include "hnambu/multipoly.hpp"

namespace hnambu {

/// Element of Q[c1, s1, c2, s2] / (c1^2 + s1^2 - 1, c2^2 + s2^2 - 1).
///
/// Stored in the normal form where every s_k appears to degree at most one,
/// obtained by rewriting s_k^2 -> 1 - c_k^2. The normal form is unique, so
/// equality and the zero test are plain polynomial comparisons.
class TrigRingElem {
 public:
  static constexpr std::size_t kArity = 4;

  TrigRingElem();
  TrigRingElem(const Scalar& value);  // NOLINT: constants embed implicitly
  /// Reduces `poly` (arity 4, variables c1, s1, c2, s2) to normal form.
  explicit TrigRingElem(const MultiPoly& poly);

  /// cos(theta_k) and sin(theta_k) for k in {1, 2}.
  static TrigRingElem cos(int k);
  static TrigRingElem sin(int k);

  const MultiPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  TrigRingElem& operator+=(const TrigRingElem& rhs);
  TrigRingElem& operator-=(const TrigRingElem& rhs);
  friend TrigRingElem operator+(TrigRingElem a, const TrigRingElem& b) { return a += b; }
  friend TrigRingElem operator-(TrigRingElem a, const TrigRingElem& b) { return a -= b; }
  friend TrigRingElem operator*(const TrigRingElem& a, const TrigRingElem& b);
  friend TrigRingElem operator*(TrigRingElem a, const Scalar& s);
  friend TrigRingElem operator*(const Scalar& s, TrigRingElem a) { return std::move(a) * s; }
  TrigRingElem operator-() const;

  /// theta -> -theta, i.e. s_k -> -s_k.
  TrigRingElem negate_angles() const;
  /// Evaluates at exact (c1, s1, c2, s2); the caller vouches for c^2 + s^2 = 1.
  Scalar evaluate(const Scalar& c1, const Scalar& s1, const Scalar& c2, const Scalar& s2) const;

  friend bool operator==(const TrigRingElem&, const TrigRingElem&) = default;

  std::string str() const { return poly_.str(); }

 private:
  MultiPoly poly_;
};

inline std::string to_string(const TrigRingElem& t) { return t.str(); }

/// Normal form of a polynomial in c1, s1, c2, s2 under s_k^2 -> 1 - c_k^2.
TrigRingElem trig_reduce(const MultiPoly& poly);

const std::vector<std::string>& trig_variable_names();

}  // namespace hnambu
