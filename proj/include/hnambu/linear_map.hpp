#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "hnambu/element.hpp"

namespace hnambu {

enum class MapKind { identity, matrix, substitution, scaling, composite, custom };

std::string to_string(MapKind kind);

/// Linear self-map of a carrier, given by its action on basis keys and
/// extended linearly.
template <class Key, CoefficientRing Ring>
class LinearMap {
 public:
  using Elem = Element<Key, Ring>;
  using BasisImage = std::function<Elem(const Key&)>;

  LinearMap(MapKind kind, std::string name, BasisImage on_basis)
      : kind_(kind), name_(std::move(name)), on_basis_(std::move(on_basis)) {}

  static LinearMap identity(const Ring& one) {
    return LinearMap(MapKind::identity, "id", [one](const Key& k) { return Elem::term(k, one); });
  }

  MapKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_identity() const { return kind_ == MapKind::identity; }

  Elem on_basis(const Key& key) const { return on_basis_(key); }

  Elem operator()(const Elem& x) const {
    if (is_identity()) return x;
    Elem out;
    for (const auto& [k, c] : x.terms()) out += on_basis_(k).scaled(c);
    return out;
  }

 private:
  MapKind kind_;
  std::string name_;
  BasisImage on_basis_;
};

/// f o g.
template <class Key, CoefficientRing Ring>
LinearMap<Key, Ring> compose(const LinearMap<Key, Ring>& f, const LinearMap<Key, Ring>& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  return LinearMap<Key, Ring>(MapKind::composite, f.name() + "*" + g.name(),
                              [f, g](const Key& k) { return f(g.on_basis(k)); });
}

/// Caches basis images. The cache is shared between copies and is not
/// synchronized; evaluate a memoized map from one thread at a time.
template <class Key, CoefficientRing Ring>
typename LinearMap<Key, Ring>::BasisImage memoize(typename LinearMap<Key, Ring>::BasisImage image) {
  auto cache = std::make_shared<std::map<Key, Element<Key, Ring>>>();
  return [image = std::move(image), cache](const Key& k) {
    auto it = cache->find(k);
    if (it != cache->end()) return it->second;
    auto value = image(k);
    cache->emplace(k, value);
    return value;
  };
}

}  // namespace hnambu
