#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hnambu/multipoly.hpp"
#include "hnambu/scalar.hpp"

namespace hnambu {

/// Multi-index i = (i_1, ..., i_n) of natural numbers, naming the
/// coefficient of t^i = t_1^{i_1} ... t_n^{i_n}.
struct MultiIndex {
  std::vector<int> exponents;

  int total() const { return total_degree(exponents); }
  std::size_t arity() const { return exponents.size(); }
  /// Componentwise order: every entry of *this is <= the matching entry.
  bool divides(const MultiIndex& other) const;
  std::string str() const;  // "0,2,1"
  static MultiIndex parse(std::string_view text);

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Graded order, matching the series layout.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return MonomialOrder{}(a.exponents, b.exponents);
  }
};

/// Enumeration of all monomials t^i with |i| <= N in n parameters, shared
/// by every series of that shape. Index 0 is the constant monomial.
class SeriesLayout {
 public:
  static std::shared_ptr<const SeriesLayout> get(std::size_t arity, int order);

  std::size_t arity() const { return arity_; }
  int order() const { return order_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponents& exponents(std::uint32_t index) const { return monomials_[index]; }
  int degree(std::uint32_t index) const { return degrees_[index]; }
  /// Index of t^e, or -1 when |e| > N or e has the wrong length.
  std::int64_t index_of(const Exponents& e) const;
  /// Index of t^(a+b), or -1 when the product is truncated away.
  std::int64_t product(std::uint32_t a, std::uint32_t b) const;

  SeriesLayout(std::size_t arity, int order);

 private:
  std::size_t arity_;
  int order_;
  std::vector<Exponents> monomials_;
  std::vector<int> degrees_;
  std::map<Exponents, std::uint32_t> lookup_;
  std::vector<std::int32_t> products_;  // dense table, empty for large layouts
};

/// Element of K[[t_1, ..., t_n]] modulo total degree N + 1.
///
/// Arithmetic re-truncates every result, so a series never holds a term of
/// total degree above its order. Operands must share arity and order.
class TruncSeries {
 public:
  using Term = std::pair<std::uint32_t, Scalar>;

  TruncSeries(std::size_t arity, int order);
  explicit TruncSeries(std::shared_ptr<const SeriesLayout> layout);

  static TruncSeries constant(std::size_t arity, int order, const Scalar& value);
  /// The formal parameter t_{param+1}.
  static TruncSeries parameter(std::size_t param, std::size_t arity, int order);
  static TruncSeries monomial(const MultiIndex& index, const Scalar& coeff, int order);
  /// Reads a polynomial in the parameters and drops degrees above `order`.
  static TruncSeries from_poly(const MultiPoly& poly, int order);

  std::size_t arity() const { return layout_->arity(); }
  int order() const { return layout_->order(); }
  const SeriesLayout& layout() const { return *layout_; }
  const std::shared_ptr<const SeriesLayout>& layout_ptr() const { return layout_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar constant_term() const;
  Scalar coefficient(const MultiIndex& index) const;
  /// Lowest total degree present; -1 for zero.
  int valuation() const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const Scalar& rhs);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Scalar& s) { return a *= s; }
  friend TruncSeries operator*(const Scalar& s, TruncSeries a) { return a *= s; }
  TruncSeries operator-() const;

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const;
  /// Integer power; negative exponents go through inverse().
  TruncSeries pow(long exponent) const;
  /// Same coefficients, re-truncated to a smaller order.
  TruncSeries truncated(int order) const;
  /// As a polynomial in the parameters.
  MultiPoly to_poly() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  /// Lowest degree first, e.g. "1 - t + t^2". Parameter names default to
  /// t (one parameter) or t1..tn.
  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const TruncSeries& other) const;
  void add_scaled(const TruncSeries& rhs, bool negate);

  std::shared_ptr<const SeriesLayout> layout_;
  std::vector<Term> terms_;  // sorted by layout index, no zeros
};

inline std::string to_string(const TruncSeries& s) { return s.str(); }

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_invert(const TruncSeries& a);
/// Truncated sum_k (-1)^k t^{2k} / (2k)! in parameter `param`.
TruncSeries series_cos(std::size_t param, std::size_t arity, int order);
/// Truncated sum_k (-1)^k t^{2k+1} / (2k+1)! in parameter `param`.
TruncSeries series_sin(std::size_t param, std::size_t arity, int order);

}  // namespace hnambu
