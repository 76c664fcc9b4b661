#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnambu/scalar.hpp"

namespace hnambu {

/// Coefficient rings usable for algebra elements: Scalar, MultiPoly,
/// TrigRingElem and TruncSeries. Structure constants are always Scalars,
/// hence the mixed product.
template <class R>
concept CoefficientRing = requires(const R a, const R b, const Scalar s) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * s } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// Finite linear combination of basis keys with coefficients in `Ring`.
/// Zero coefficients are never stored.
template <class Key, CoefficientRing Ring = Scalar>
class Element {
 public:
  using key_type = Key;
  using ring_type = Ring;
  using Terms = std::map<Key, Ring>;

  Element() = default;
  static Element term(const Key& key, const Ring& coeff) {
    Element e;
    e.add_term(key, coeff);
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::optional<Ring> coefficient(const Key& key) const {
    auto it = terms_.find(key);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  void add_term(const Key& key, const Ring& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
  }
  Element& operator-=(const Element& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  /// Coefficient-wise product with a ring element.
  Element scaled(const Ring& factor) const {
    Element out;
    if (factor.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * factor);
    return out;
  }
  Element scaled(const Scalar& factor) const
    requires(!std::same_as<Ring, Scalar>)
  {
    Element out;
    if (factor.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * factor);
    return out;
  }

  friend Element operator*(const Element& e, const Ring& factor) { return e.scaled(factor); }

  friend bool operator==(const Element&, const Element&) = default;

  std::string str() const {
    std::vector<SignedTerm> parts;
    for (const auto& [k, c] : terms_) parts.push_back(format_coefficient(c, to_string(k)));
    return join_terms(parts);
  }

 private:
  static SignedTerm format_coefficient(const Ring& c, const std::string& key) {
    if constexpr (std::same_as<Ring, Scalar>) {
      return format_term(c, key);
    } else {
      std::string s = to_string(c);
      if (s == "1") return {false, key};
      if (s == "-1") return {true, key};
      return {false, "(" + s + ")*" + key};
    }
  }

  Terms terms_;
};

template <class Key, class Ring>
std::string to_string(const Element<Key, Ring>& e) {
  return e.str();
}

/// Embeds a base-field element into a coefficient ring with unit `one`.
template <class Key, CoefficientRing Ring>
Element<Key, Ring> lift(const Element<Key, Scalar>& e, const Ring& one) {
  Element<Key, Ring> out;
  for (const auto& [k, c] : e.terms()) out.add_term(k, one * c);
  return out;
}

/// Basis vector with coefficient one.
template <class Key>
Element<Key, Scalar> basis(const Key& key) {
  return Element<Key, Scalar>::term(key, Scalar(1));
}

}  // namespace hnambu
