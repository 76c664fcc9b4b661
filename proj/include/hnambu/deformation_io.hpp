#pragma once

#include <istream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hnambu/deformation.hpp"

namespace hnambu {

// Text format of a tabulated deformation family (one record per line):
//
//   hnambu-deformation 1
//   base <base-id>
//   carrier <carrier>
//   order <N>
//   parameters <n>
//   parameter <name> <meaning ...>          (n lines)
//   support <m> <key_1> ... <key_m>
//   component <i_1,...,i_n>                 (graded order, nonempty ones)
//   alpha <key> = <coeff> <key> ...
//   beta <key> = <coeff> <key> ...
//   bracket <key> <key> <key> = <coeff> <key> ...
//   end
//
// Only nonzero entries are written. Inside the support a missing entry is
// zero; outside it the loaded family raises OutOfSupport.

namespace detail {

template <class Key>
std::string element_record(const Element<Key, Scalar>& e) {
  std::string out = "=";
  for (const auto& [k, c] : e.terms()) out += " " + c.str() + " " + to_string(k);
  return out;
}

template <class Key>
Element<Key, Scalar> parse_element_record(std::istringstream& in) {
  std::string eq;
  in >> eq;
  if (eq != "=") throw ParseError("expected '=' in deformation record");
  Element<Key, Scalar> out;
  std::string coeff;
  std::string key;
  while (in >> coeff) {
    if (!(in >> key)) throw ParseError("dangling coefficient in deformation record");
    out.add_term(parse_key<Key>(key), Scalar::parse(coeff));
  }
  return out;
}

}  // namespace detail

/// Tabulates every component of `family` on `support` (all ordered triples
/// for the bracket) and writes the text format above.
template <class Key>
std::string save_family(const DeformationFamily<Key>& family, std::span<const Key> support) {
  std::ostringstream out;
  out << "hnambu-deformation 1\n";
  out << "base " << family.base_id() << "\n";
  out << "carrier " << family.carrier() << "\n";
  out << "order " << family.order() << "\n";
  out << "parameters " << family.arity() << "\n";
  for (const auto& p : family.parameters()) out << "parameter " << p.name << " " << p.meaning << "\n";
  out << "support " << support.size();
  for (const auto& k : support) out << " " << to_string(k);
  out << "\n";
  for (const auto& i : family.indices()) {
    std::ostringstream body;
    for (const auto& k : support) {
      auto a = family.alpha_component(i, k);
      if (!a.is_zero()) body << "alpha " << to_string(k) << " " << detail::element_record(a) << "\n";
    }
    for (const auto& k : support) {
      auto b = family.beta_component(i, k);
      if (!b.is_zero()) body << "beta " << to_string(k) << " " << detail::element_record(b) << "\n";
    }
    for (const auto& a : support)
      for (const auto& b : support)
        for (const auto& c : support) {
          auto v = family.bracket_component(i, a, b, c);
          if (!v.is_zero()) {
            body << "bracket " << to_string(a) << " " << to_string(b) << " " << to_string(c) << " "
                 << detail::element_record(v) << "\n";
          }
        }
    std::string text = body.str();
    if (!text.empty()) out << "component " << i.str() << "\n" << text;
  }
  out << "end\n";
  return out.str();
}

/// Reads the text format into a table-backed family.
template <class Key>
DeformationFamily<Key> load_family(std::istream& in) {
  auto expect = [&](const std::string& keyword) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("unexpected end of deformation file, wanted '" + keyword + "'");
    if (line.rfind(keyword + " ", 0) != 0) throw ParseError("expected '" + keyword + "', got '" + line + "'");
    return line.substr(keyword.size() + 1);
  };
  if (expect("hnambu-deformation") != "1") throw ParseError("unsupported deformation format version");
  std::string base = expect("base");
  std::string carrier = expect("carrier");
  int order = std::stoi(expect("order"));
  int n = std::stoi(expect("parameters"));
  std::vector<Parameter> params;
  for (int k = 0; k < n; ++k) {
    std::string rest = expect("parameter");
    auto space = rest.find(' ');
    params.push_back({rest.substr(0, space), space == std::string::npos ? "" : rest.substr(space + 1)});
  }
  std::istringstream support_line(expect("support"));
  std::size_t m = 0;
  support_line >> m;
  auto support = std::make_shared<std::set<Key>>();
  for (std::size_t k = 0; k < m; ++k) {
    std::string key;
    if (!(support_line >> key)) throw ParseError("support list shorter than declared");
    support->insert(parse_key<Key>(key));
  }

  struct Table {
    std::map<Key, Element<Key, TruncSeries>> alpha, beta;
    std::map<Triple<Key>, Element<Key, TruncSeries>> bracket;
  };
  auto table = std::make_shared<Table>();
  std::optional<MultiIndex> current;
  std::string line;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      ended = true;
      break;
    }
    std::istringstream rec(line);
    std::string kind;
    rec >> kind;
    if (kind == "component") {
      std::string idx;
      rec >> idx;
      current = MultiIndex::parse(idx);
      if (current->arity() != params.size()) throw ParseError("component index arity mismatch");
      if (current->total() > order) throw ParseError("component beyond the declared order");
      continue;
    }
    if (!current) throw ParseError("record before the first component");
    auto lift_term = [&](const Element<Key, Scalar>& e) {
      Element<Key, TruncSeries> out;
      for (const auto& [k, c] : e.terms()) out.add_term(k, TruncSeries::monomial(*current, c, order));
      return out;
    };
    if (kind == "alpha" || kind == "beta") {
      std::string key;
      rec >> key;
      auto& slot = (kind == "alpha" ? table->alpha : table->beta)[parse_key<Key>(key)];
      slot += lift_term(detail::parse_element_record<Key>(rec));
    } else if (kind == "bracket") {
      std::string a, b, c;
      rec >> a >> b >> c;
      Triple<Key> t{parse_key<Key>(a), parse_key<Key>(b), parse_key<Key>(c)};
      table->bracket[t] += lift_term(detail::parse_element_record<Key>(rec));
    } else {
      throw ParseError("unknown deformation record '" + kind + "'");
    }
  }
  if (!ended) throw ParseError("deformation file lacks 'end'");

  auto require = [support](const Key& k) {
    if (!support->contains(k)) throw OutOfSupport("key " + to_string(k) + " is outside the tabulated support");
  };
  auto lookup_twist = [table, require](bool alpha) {
    return [table, require, alpha](const Key& k) {
      require(k);
      const auto& m = alpha ? table->alpha : table->beta;
      auto it = m.find(k);
      return it == m.end() ? Element<Key, TruncSeries>{} : it->second;
    };
  };
  return DeformationFamily<Key>(
      base, carrier, params, order,
      [table, require](const Key& a, const Key& b, const Key& c) {
        require(a);
        require(b);
        require(c);
        auto it = table->bracket.find(Triple<Key>{a, b, c});
        return it == table->bracket.end() ? Element<Key, TruncSeries>{} : it->second;
      },
      lookup_twist(true), lookup_twist(false));
}

template <class Key>
DeformationFamily<Key> load_family(const std::string& text) {
  std::istringstream in(text);
  return load_family<Key>(in);
}

}  // namespace hnambu
