#include "hnambu/models/virasoro_witt.hpp"

#include <array>

namespace hnambu {

Element<Generator, Scalar> vw_rule(const Generator& a, const Generator& b, const Generator& c, const Scalar& z) {
  std::array<Generator, 3> g{a, b, c};
  int sign = 1;
  // stable insertion sort by kind; each adjacent swap flips the sign
  for (int i = 1; i < 3; ++i) {
    for (int j = i; j > 0 && g[j - 1].kind == GenKind::R && g[j].kind == GenKind::Q; --j) {
      std::swap(g[j - 1], g[j]);
      sign = -sign;
    }
  }
  const long k = g[0].index;
  const long m = g[1].index;
  const long n = g[2].index;
  const int total = g[0].index + g[1].index + g[2].index;
  const Generator q_out{GenKind::Q, total};
  const Generator r_out{GenKind::R, total};
  int q_count = 0;
  for (const auto& x : g) q_count += x.kind == GenKind::Q ? 1 : 0;
  Element<Generator, Scalar> out;
  switch (q_count) {
    case 3:
      out.add_term(r_out, Scalar((k - m) * (m - n) * (k - n) * sign));
      break;
    case 2:
      out.add_term(q_out, Scalar((k - m) * sign));
      out.add_term(r_out, z * Scalar((k - m) * n * sign));
      break;
    case 1:
      out.add_term(r_out, Scalar((n - m) * sign));
      break;
    default:
      break;
  }
  return out;
}

std::vector<Generator> vw_generators(int lo, int hi) {
  if (lo > hi) throw InvalidArgument("empty generator index range");
  std::vector<Generator> out;
  for (GenKind kind : {GenKind::Q, GenKind::R}) {
    for (int n = lo; n <= hi; ++n) out.push_back(Generator{kind, n});
  }
  return out;
}

LinearMap<Generator, Scalar> rho_q_scalar(const Scalar& q) {
  if (q.is_zero()) throw InvalidArgument("rho_q needs q != 0");
  return rho_q(q, q.inverse(), Scalar(1), "rho_q(q=" + q.str() + ")");
}

MultiPoly laurent_unit() { return MultiPoly::constant(1, 1).with_names({"q"}).with_laurent_mask(1); }

LinearMap<Generator, MultiPoly> rho_q_laurent() {
  MultiPoly one = laurent_unit();
  MultiPoly q = MultiPoly(1, {"q"}, 1);
  q.add_term({1}, 1);
  MultiPoly q_inv = MultiPoly(1, {"q"}, 1);
  q_inv.add_term({-1}, 1);
  return rho_q(q, q_inv, one, "rho_q");
}

LinearMap<Generator, TruncSeries> rho_q_series(int order) {
  TruncSeries q = TruncSeries::constant(1, order, 1) + TruncSeries::parameter(0, 1, order);
  return rho_q_series(q);
}

LinearMap<Generator, TruncSeries> rho_q_series(const TruncSeries& q) {
  if (q.constant_term().is_zero()) throw InvalidArgument("rho_q needs a series q with unit constant term");
  TruncSeries one = TruncSeries::constant(q.arity(), q.order(), 1);
  return rho_q(q, q.inverse(), one, "rho_q(q=" + q.str() + ")");
}

}  // namespace hnambu
