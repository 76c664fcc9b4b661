#pragma once

#include <vector>

#include "hnambu/checks.hpp"
#include "hnambu/keys.hpp"

namespace hnambu {

/// Default finite samples per model. Every sampled tuple consists of basis
/// vectors except the curated entries named below.

/// All 64 basis triples and all 1024 basis 5-tuples of R4.
std::vector<Triple<Coord>> cross4_default_triples();
std::vector<FiveTuple<Coord>> cross4_default_tuples();
/// (e1, e2, e3, e4, e1 + e2 + e4).
FiveTuple<Coord> cross4_theta_witness();

/// All triples of monomials of degree <= `degree`.
std::vector<Triple<Monomial>> jacobian_default_triples(int degree = 3);
/// Curated 5-tuples of monomials of degree <= `degree`: the
/// (x1, x2, x3^3, x1^2, x2*x3) witness first, then the coordinate tuple,
/// then `random_count` tuples drawn with a fixed-seed mt19937.
std::vector<FiveTuple<Monomial>> jacobian_default_tuples(int degree = 3, std::size_t random_count = 62);
FiveTuple<Monomial> jacobian_k4_witness();

inline constexpr unsigned kJacobianSampleSeed = 20100515U;

/// All triples / 5-tuples of Q_n, R_n with lo <= n <= hi.
std::vector<Triple<Generator>> vw_default_triples(int lo = -2, int hi = 2);
std::vector<FiveTuple<Generator>> vw_default_tuples(int lo = -2, int hi = 2);

}  // namespace hnambu
