#pragma once

#include <array>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hnambu/algebra.hpp"
#include "hnambu/report.hpp"

namespace hnambu {

template <class Key>
using Triple = std::array<Key, 3>;

/// Five base-field vectors (x1, ..., x5) fed to the hom-Nambu identity.
template <class Key>
using FiveTuple = std::array<Element<Key, Scalar>, 5>;

struct Permutation3 {
  std::array<int, 3> image;
  int sign;
};

/// All of S_3 with signs, identity first.
inline constexpr std::array<Permutation3, 6> kS3{{
    {{0, 1, 2}, +1},
    {{1, 0, 2}, -1},
    {{0, 2, 1}, -1},
    {{2, 1, 0}, -1},
    {{1, 2, 0}, +1},
    {{2, 0, 1}, +1},
}};

template <class Key>
std::string witness_str(const Triple<Key>& t) {
  return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

template <class Key>
std::string witness_str(const FiveTuple<Key>& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < 5; ++k) {
    if (k > 0) out += ", ";
    out += t[k].str();
  }
  return out + ")";
}

/// Every ordered triple of `keys`.
template <class Key>
std::vector<Triple<Key>> all_triples(std::span<const Key> keys) {
  std::vector<Triple<Key>> out;
  out.reserve(keys.size() * keys.size() * keys.size());
  for (const auto& a : keys)
    for (const auto& b : keys)
      for (const auto& c : keys) out.push_back({a, b, c});
  return out;
}

/// Every ordered 5-tuple of basis vectors drawn from `keys`.
template <class Key>
std::vector<FiveTuple<Key>> all_basis_tuples(std::span<const Key> keys) {
  std::vector<FiveTuple<Key>> out;
  std::size_t n = keys.size();
  std::size_t total = n * n * n * n * n;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    FiveTuple<Key> t;
    std::size_t rest = code;
    for (int slot = 4; slot >= 0; --slot) {
      t[slot] = basis(keys[rest % n]);
      rest /= n;
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// [x_s(1), x_s(2), x_s(3)] = sgn(s) [x1, x2, x3] for all s in S_3.
template <class Key, CoefficientRing Ring>
Report check_skew_symmetry(const TernaryHomAlgebra<Key, Ring>& a, std::span<const Triple<Key>> triples) {
  Report report{"skew-symmetry", a.id, triples.size(), {}};
  for (const auto& t : triples) {
    auto base = a.basis_bracket(t[0], t[1], t[2]);
    for (const auto& p : kS3) {
      if (p.sign == 1 && p.image == std::array<int, 3>{0, 1, 2}) continue;
      auto permuted = a.basis_bracket(t[p.image[0]], t[p.image[1]], t[p.image[2]]);
      auto residual = p.sign > 0 ? permuted - base : permuted + base;
      if (!residual.is_zero()) {
        report.violations.push_back(
            {witness_str(t) + " sigma=(" + std::to_string(p.image[0] + 1) + "," +
                 std::to_string(p.image[1] + 1) + "," + std::to_string(p.image[2] + 1) + ")",
             residual.str()});
      }
    }
  }
  return report;
}

/// The two sides of the ternary hom-Nambu identity on one tuple:
/// lhs = [a(x1), b(x2), [x3, x4, x5]] and rhs = the sum of the three terms
/// [[x1, x2, x3], a(x4), b(x5)], [a(x3), [x1, x2, x4], b(x5)] and
/// [a(x3), b(x4), [x1, x2, x5]].
template <class Key, CoefficientRing Ring>
struct HomNambuSides {
  Element<Key, Ring> lhs;
  std::array<Element<Key, Ring>, 3> rhs_terms;
  Element<Key, Ring> rhs;
  Element<Key, Ring> residual;
};

template <class Key, CoefficientRing Ring>
HomNambuSides<Key, Ring> hom_nambu_sides(const TernaryHomAlgebra<Key, Ring>& a,
                                        const std::array<Element<Key, Ring>, 5>& x) {
  HomNambuSides<Key, Ring> s;
  auto alpha1 = a.alpha(x[0]);
  auto beta2 = a.beta(x[1]);
  auto alpha3 = a.alpha(x[2]);
  auto alpha4 = a.alpha(x[3]);
  auto beta4 = a.beta(x[3]);
  auto beta5 = a.beta(x[4]);
  s.lhs = a.bracket(alpha1, beta2, a.bracket(x[2], x[3], x[4]));
  s.rhs_terms[0] = a.bracket(a.bracket(x[0], x[1], x[2]), alpha4, beta5);
  s.rhs_terms[1] = a.bracket(alpha3, a.bracket(x[0], x[1], x[3]), beta5);
  s.rhs_terms[2] = a.bracket(alpha3, beta4, a.bracket(x[0], x[1], x[4]));
  s.rhs = s.rhs_terms[0] + s.rhs_terms[1] + s.rhs_terms[2];
  s.residual = s.lhs - s.rhs;
  return s;
}

template <class Key, CoefficientRing Ring>
  requires(!std::same_as<Ring, Scalar>)
HomNambuSides<Key, Ring> hom_nambu_sides(const TernaryHomAlgebra<Key, Ring>& a, const FiveTuple<Key>& x) {
  return hom_nambu_sides(a, std::array<Element<Key, Ring>, 5>{a.lift(x[0]), a.lift(x[1]), a.lift(x[2]),
                                                             a.lift(x[3]), a.lift(x[4])});
}

template <class Key, CoefficientRing Ring>
Report check_hom_nambu_identity(const TernaryHomAlgebra<Key, Ring>& a, std::span<const FiveTuple<Key>> tuples) {
  Report report{a.is_nambu() ? "nambu-identity" : "hom-nambu-identity", a.id, tuples.size(), {}};
  for (const auto& t : tuples) {
    auto sides = hom_nambu_sides(a, t);
    if (!sides.residual.is_zero()) report.violations.push_back({witness_str(t), sides.residual.str()});
  }
  return report;
}

template <class Key>
std::vector<Key> distinct_keys(std::span<const Triple<Key>> triples) {
  std::set<Key> seen;
  for (const auto& t : triples) seen.insert(t.begin(), t.end());
  return {seen.begin(), seen.end()};
}

/// f([x, y, z]) = [f x, f y, f z]' on the sampled triples, and
/// f o alpha = alpha' o f, f o beta = beta' o f on every sampled key.
template <class Key, CoefficientRing Ring>
Report check_morphism(const LinearMap<Key, Ring>& f, const TernaryHomAlgebra<Key, Ring>& a,
                      const TernaryHomAlgebra<Key, Ring>& target, std::span<const Triple<Key>> triples) {
  if (a.carrier != target.carrier) {
    throw CarrierMismatch("morphism between carriers '" + a.carrier + "' and '" + target.carrier + "'");
  }
  Report report{"morphism:" + f.name(), a.id + "->" + target.id, triples.size(), {}};
  for (const auto& t : triples) {
    auto image = f(a.basis_bracket(t[0], t[1], t[2]));
    auto expected = target.bracket(f.on_basis(t[0]), f.on_basis(t[1]), f.on_basis(t[2]));
    auto residual = image - expected;
    if (!residual.is_zero()) report.violations.push_back({"bracket " + witness_str(t), residual.str()});
  }
  for (const auto& k : distinct_keys(triples)) {
    auto alpha_res = f(a.alpha.on_basis(k)) - target.alpha(f.on_basis(k));
    if (!alpha_res.is_zero()) report.violations.push_back({"alpha " + to_string(k), alpha_res.str()});
    auto beta_res = f(a.beta.on_basis(k)) - target.beta(f.on_basis(k));
    if (!beta_res.is_zero()) report.violations.push_back({"beta " + to_string(k), beta_res.str()});
  }
  return report;
}

/// (V, rho o [., ., .], (rho, rho)). `a` must have identity twists and rho
/// must pass check_morphism on `sample`; otherwise InvalidArgument.
template <class Key, CoefficientRing Ring>
TernaryHomAlgebra<Key, Ring> twist_by_endomorphism(const TernaryHomAlgebra<Key, Ring>& a,
                                                   const LinearMap<Key, Ring>& rho,
                                                   std::span<const Triple<Key>> sample) {
  if (!a.is_nambu()) throw InvalidArgument("twisting requires a Nambu algebra (identity twists)");
  if (rho.is_identity()) return a;
  Report endo = check_morphism(rho, a, a, sample);
  if (!endo.passed()) {
    throw InvalidArgument("'" + rho.name() + "' is not an endomorphism of " + a.id + ": " +
                          endo.violations.front().witness + " leaves " + endo.violations.front().residual);
  }
  auto rule = [base = a.rule, rho](const Key& x, const Key& y, const Key& z) { return rho(base(x, y, z)); };
  return TernaryHomAlgebra<Key, Ring>{a.id + "^" + rho.name(), a.carrier, a.unit, rule, rho, rho};
}

/// alpha = beta on the sampled keys and alpha is an endomorphism.
template <class Key, CoefficientRing Ring>
Report check_multiplicative(const TernaryHomAlgebra<Key, Ring>& a, std::span<const Triple<Key>> triples) {
  Report twins{"alpha=beta", a.id, 0, {}};
  for (const auto& k : distinct_keys(triples)) {
    ++twins.sample_size;
    auto diff = a.alpha.on_basis(k) - a.beta.on_basis(k);
    if (!diff.is_zero()) twins.violations.push_back({"alpha-beta " + to_string(k), diff.str()});
  }
  Report endo = check_morphism(a.alpha, a, a, triples);
  Report out = merge_reports("multiplicativity", a.id, {twins, endo});
  out.sample_size = triples.size();
  return out;
}

}  // namespace hnambu
