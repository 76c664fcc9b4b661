#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hnambu/element.hpp"
#include "hnambu/linear_map.hpp"

namespace hnambu {

/// (V, [., ., .], (alpha, beta)): a trilinear bracket on a carrier with
/// basis `Key`, given on basis triples, plus two twisting maps.
///
/// `unit` is the one of the coefficient ring; it lifts base-field sample
/// vectors into the ring (series rings need it to know their shape).
template <class Key, CoefficientRing Ring>
struct TernaryHomAlgebra {
  using Elem = Element<Key, Ring>;
  using BasisRule = std::function<Elem(const Key&, const Key&, const Key&)>;
  using Map = LinearMap<Key, Ring>;

  std::string id;
  std::string carrier;
  Ring unit;
  BasisRule rule;
  Map alpha;
  Map beta;

  Elem basis_bracket(const Key& a, const Key& b, const Key& c) const { return rule(a, b, c); }

  /// Trilinear extension of the basis rule.
  Elem bracket(const Elem& x, const Elem& y, const Elem& z) const {
    Elem out;
    for (const auto& [kx, cx] : x.terms()) {
      for (const auto& [ky, cy] : y.terms()) {
        Ring cxy = cx * cy;
        for (const auto& [kz, cz] : z.terms()) {
          Elem value = rule(kx, ky, kz);
          if (value.is_zero()) continue;
          out += value.scaled(cxy * cz);
        }
      }
    }
    return out;
  }

  Elem lift(const Element<Key, Scalar>& x) const { return hnambu::lift(x, unit); }

  bool is_nambu() const { return alpha.is_identity() && beta.is_identity(); }
};

/// Builds an algebra with identity twists from a Scalar-valued basis rule.
template <class Key, CoefficientRing Ring>
TernaryHomAlgebra<Key, Ring> nambu_algebra(
    std::string id, std::string carrier, const Ring& one,
    std::function<Element<Key, Scalar>(const Key&, const Key&, const Key&)> rule) {
  using Alg = TernaryHomAlgebra<Key, Ring>;
  typename Alg::BasisRule lifted;
  if constexpr (std::same_as<Ring, Scalar>) {
    lifted = std::move(rule);
  } else {
    lifted = [rule = std::move(rule), one](const Key& a, const Key& b, const Key& c) {
      return hnambu::lift(rule(a, b, c), one);
    };
  }
  return Alg{std::move(id), std::move(carrier), one, std::move(lifted),
             Alg::Map::identity(one), Alg::Map::identity(one)};
}

/// Same bracket, twisting maps replaced.
template <class Key, CoefficientRing Ring>
TernaryHomAlgebra<Key, Ring> with_twists(const TernaryHomAlgebra<Key, Ring>& a,
                                         LinearMap<Key, Ring> alpha, LinearMap<Key, Ring> beta,
                                         std::string id) {
  return TernaryHomAlgebra<Key, Ring>{std::move(id), a.carrier, a.unit, a.rule, std::move(alpha),
                                      std::move(beta)};
}

/// Same bracket with identity twists; used to test the untwisted Nambu
/// identity on a twisted bracket.
template <class Key, CoefficientRing Ring>
TernaryHomAlgebra<Key, Ring> plain_nambu(const TernaryHomAlgebra<Key, Ring>& a) {
  using Map = LinearMap<Key, Ring>;
  return with_twists(a, Map::identity(a.unit), Map::identity(a.unit), a.id + "/plain");
}

}  // namespace hnambu
