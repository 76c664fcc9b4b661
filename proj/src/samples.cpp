#include "hnambu/models/samples.hpp"

#include <random>

#include "hnambu/models/cross4.hpp"
#include "hnambu/models/jacobian3.hpp"
#include "hnambu/models/virasoro_witt.hpp"

namespace hnambu {

std::vector<Triple<Coord>> cross4_default_triples() {
  auto keys = cross4_basis();
  return all_triples<Coord>(keys);
}

std::vector<FiveTuple<Coord>> cross4_default_tuples() {
  auto keys = cross4_basis();
  return all_basis_tuples<Coord>(keys);
}

FiveTuple<Coord> cross4_theta_witness() {
  return {basis(Coord{1}), basis(Coord{2}), basis(Coord{3}), basis(Coord{4}),
          basis(Coord{1}) + basis(Coord{2}) + basis(Coord{4})};
}

std::vector<Triple<Monomial>> jacobian_default_triples(int degree) {
  auto keys = monomials_up_to(degree);
  return all_triples<Monomial>(keys);
}

FiveTuple<Monomial> jacobian_k4_witness() {
  return {basis(Monomial{{1, 0, 0}}), basis(Monomial{{0, 1, 0}}), basis(Monomial{{0, 0, 3}}),
          basis(Monomial{{2, 0, 0}}), basis(Monomial{{0, 1, 1}})};
}

std::vector<FiveTuple<Monomial>> jacobian_default_tuples(int degree, std::size_t random_count) {
  if (degree < 1) throw InvalidArgument("jacobian samples need degree >= 1");
  std::vector<FiveTuple<Monomial>> out{jacobian_k4_witness()};
  out.push_back({basis(Monomial{{1, 0, 0}}), basis(Monomial{{0, 1, 0}}), basis(Monomial{{0, 0, 1}}),
                 basis(Monomial{{1, 0, 0}}), basis(Monomial{{0, 1, 0}})});
  auto keys = monomials_up_to(degree);
  std::mt19937 gen(kJacobianSampleSeed);
  for (std::size_t k = 0; k < random_count; ++k) {
    FiveTuple<Monomial> t;
    for (auto& slot : t) slot = basis(keys[gen() % keys.size()]);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Triple<Generator>> vw_default_triples(int lo, int hi) {
  auto keys = vw_generators(lo, hi);
  return all_triples<Generator>(keys);
}

std::vector<FiveTuple<Generator>> vw_default_tuples(int lo, int hi) {
  auto keys = vw_generators(lo, hi);
  return all_basis_tuples<Generator>(keys);
}

}  // namespace hnambu
