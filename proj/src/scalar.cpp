#include "hnambu/scalar.hpp"

#include <algorithm>

namespace hnambu {

namespace {

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw ParseError("empty rational");
  if (!std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == '/' || c == '-';
      })) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

mpq_class parse_imag_coefficient(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  mpq_class q = 1;
  if (!text.empty()) {
    if (text.front() == '(') {
      if (text.back() != ')') throw ParseError("unbalanced parenthesis");
      text = text.substr(1, text.size() - 2);
    }
    q = parse_rational(text);
  }
  return negative ? mpq_class(-q) : q;
}

std::string imag_part_str(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  if (im.get_den() == 1) return im.get_str() + "i";
  if (sgn(im) < 0) return "-(" + mpq_class(-im).get_str() + ")i";
  return "(" + im.get_str() + ")i";
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ') compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.remove_suffix(1);
  int depth = 0;
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    char c = s[k];
    if (c == ')') ++depth;
    if (c == '(') --depth;
    if (depth == 0 && (c == '+' || c == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(mpq_class(0), parse_imag_coefficient(s));
  return Scalar(parse_rational(s.substr(0, split)), parse_imag_coefficient(s.substr(split)));
}

bool Scalar::is_negative() const {
  if (sgn(im_) == 0) return sgn(re_) < 0;
  return sgn(re_) == 0 && sgn(im_) < 0;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (sgn(im_) == 0) return Scalar(mpq_class(1 / re_));
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result = 1;
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  if (sgn(rhs.im_) != 0) im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_part_str(im_);
  std::string im = imag_part_str(im_);
  return re_.get_str() + (im.front() == '-' ? "" : "+") + im;
}

std::optional<Scalar> scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      if (b.is_zero()) return std::nullopt;
      return a / b;
  }
  return std::nullopt;
}

SignedTerm format_term(const Scalar& coeff, const std::string& rest) {
  bool negative = coeff.is_negative();
  Scalar magnitude = negative ? -coeff : coeff;
  if (rest.empty()) return {negative, magnitude.str()};
  if (magnitude.is_one()) return {negative, rest};
  bool compound = sgn(magnitude.real()) != 0 && sgn(magnitude.imag()) != 0;
  std::string c = magnitude.str();
  return {negative, (compound ? "(" + c + ")" : c) + "*" + rest};
}

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k == 0) {
      out = (terms[k].negative ? "-" : "") + terms[k].body;
    } else {
      out += terms[k].negative ? " - " : " + ";
      out += terms[k].body;
    }
  }
  return out;
}

}  // namespace hnambu
