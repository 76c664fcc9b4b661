#include "hnambu/keys.hpp"

#include <charconv>

namespace hnambu {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

const std::vector<std::string>& monomial_names() {
  static const std::vector<std::string> names{"x1", "x2", "x3"};
  return names;
}

}  // namespace

std::string to_string(const Coord& c) { return "e" + std::to_string(c.index); }

std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  return MultiPoly(3, monomial_names()).monomial_str(to_exponents(m));
}

std::string to_string(const Generator& g) {
  return (g.kind == GenKind::Q ? "Q" : "R") + std::to_string(g.index);
}

Coord KeyTraits<Coord>::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != 'e') throw ParseError("malformed basis vector '" + std::string(text) + "'");
  return Coord{parse_int(text.substr(1), "basis vector")};
}

Monomial KeyTraits<Monomial>::parse(std::string_view text) {
  MultiPoly p = MultiPoly::parse(text, monomial_names());
  if (p.terms().size() != 1 || !p.terms().begin()->second.is_one()) {
    throw ParseError("not a monic monomial: '" + std::string(text) + "'");
  }
  return to_monomial(p.terms().begin()->first);
}

Generator KeyTraits<Generator>::parse(std::string_view text) {
  if (text.size() < 2 || (text.front() != 'Q' && text.front() != 'R')) {
    throw ParseError("malformed generator '" + std::string(text) + "'");
  }
  return Generator{text.front() == 'Q' ? GenKind::Q : GenKind::R, parse_int(text.substr(1), "generator")};
}

Exponents to_exponents(const Monomial& m) { return {m.exponents[0], m.exponents[1], m.exponents[2]}; }

Monomial to_monomial(const Exponents& e) {
  if (e.size() != 3) throw ArityMismatch("monomial needs three exponents");
  return Monomial{{e[0], e[1], e[2]}};
}

}  // namespace hnambu
