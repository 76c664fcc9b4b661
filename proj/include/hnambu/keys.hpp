#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "hnambu/multipoly.hpp"

namespace hnambu {

/// Standard basis vector e_index of a coordinate space (1-based).
struct Coord {
  int index = 1;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Monomial x1^a x2^b x3^c of K[x1, x2, x3].
struct Monomial {
  std::array<int, 3> exponents{0, 0, 0};
  int degree() const { return exponents[0] + exponents[1] + exponents[2]; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class GenKind { Q, R };

/// Generator Q_n or R_n of the Virasoro-Witt carrier. Q's order before R's.
struct Generator {
  GenKind kind = GenKind::Q;
  int index = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Coord& c);
std::string to_string(const Monomial& m);
std::string to_string(const Generator& g);

template <class Key>
struct KeyTraits;

template <>
struct KeyTraits<Coord> {
  static Coord parse(std::string_view text);
};

template <>
struct KeyTraits<Monomial> {
  static Monomial parse(std::string_view text);
};

template <>
struct KeyTraits<Generator> {
  static Generator parse(std::string_view text);
};

template <class Key>
Key parse_key(std::string_view text) {
  return KeyTraits<Key>::parse(text);
}

Exponents to_exponents(const Monomial& m);
Monomial to_monomial(const Exponents& e);

}  // namespace hnambu
