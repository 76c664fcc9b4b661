#pragma once

#include <string>
#include <vector>

#include "hnambu/checks.hpp"
#include "hnambu/keys.hpp"
#include "hnambu/multipoly.hpp"
#include "hnambu/series.hpp"

namespace hnambu {

/// Bracket of three generators of the ternary Virasoro-Witt algebra:
///   [Q_k, Q_m, Q_n] = (k-m)(m-n)(k-n) R_{k+m+n}
///   [Q_k, Q_m, R_n] = (k-m)(Q_{k+m+n} + z n R_{k+m+n})
///   [Q_k, R_m, R_n] = (n-m) R_{k+m+n}
///   [R_k, R_m, R_n] = 0
/// Arguments in other kind orders are moved into Q-before-R order with a
/// stable sort and the result carries the sign of that permutation.
Element<Generator, Scalar> vw_rule(const Generator& a, const Generator& b, const Generator& c, const Scalar& z);

template <CoefficientRing Ring>
TernaryHomAlgebra<Generator, Ring> vw_algebra(const Scalar& z, const Ring& one) {
  return nambu_algebra<Generator, Ring>("vw(z=" + z.str() + ")", "W", one,
                                        [z](const Generator& a, const Generator& b, const Generator& c) {
                                          return vw_rule(a, b, c, z);
                                        });
}

/// Q_lo..Q_hi followed by R_lo..R_hi.
std::vector<Generator> vw_generators(int lo, int hi);

/// Generator scaling Q_n -> q^n Q_n, R_n -> q^n R_n. `q_inverse` serves
/// negative indices. Powers are cached per index.
template <CoefficientRing Ring>
LinearMap<Generator, Ring> rho_q(const Ring& q, const Ring& q_inverse, const Ring& one, std::string name) {
  auto cache = std::make_shared<std::map<int, Ring>>();
  auto image = [q, q_inverse, one, cache](const Generator& g) {
    auto it = cache->find(g.index);
    if (it == cache->end()) {
      Ring p = one;
      const Ring& base = g.index >= 0 ? q : q_inverse;
      for (int k = 0; k < std::abs(g.index); ++k) p = p * base;
      it = cache->emplace(g.index, p).first;
    }
    return Element<Generator, Ring>::term(g, it->second);
  };
  return LinearMap<Generator, Ring>(MapKind::scaling, std::move(name), image);
}

/// q a nonzero scalar.
LinearMap<Generator, Scalar> rho_q_scalar(const Scalar& q);
/// q a Laurent variable; coefficients live in Q(i)[q, 1/q].
LinearMap<Generator, MultiPoly> rho_q_laurent();
MultiPoly laurent_unit();
/// q = 1 + t with t formal, truncated at `order`.
LinearMap<Generator, TruncSeries> rho_q_series(int order);
/// q an arbitrary series; it must have a unit constant term.
LinearMap<Generator, TruncSeries> rho_q_series(const TruncSeries& q);

}  // namespace hnambu
