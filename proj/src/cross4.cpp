#include "hnambu/models/cross4.hpp"

namespace hnambu {

int levi_civita(int i, int j, int k, int l) {
  std::array<int, 4> p{i, j, k, l};
  for (int v : p) {
    if (v < 1 || v > 4) return 0;
  }
  int sign = 1;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (p[a] == p[b]) return 0;
      if (p[a] > p[b]) sign = -sign;
    }
  }
  return sign;
}

namespace {

Scalar det3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& e,
            const Scalar& f, const Scalar& g, const Scalar& h, const Scalar& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

Vec4 cross4_determinant(const Vec4& x, const Vec4& y, const Vec4& z) {
  Vec4 out;
  for (int s = 0; s < 4; ++s) {
    std::array<int, 3> rows{};
    int n = 0;
    for (int r = 0; r < 4; ++r) {
      if (r != s) rows[n++] = r;
    }
    Scalar minor = det3(x[rows[0]], y[rows[0]], z[rows[0]], x[rows[1]], y[rows[1]], z[rows[1]], x[rows[2]],
                        y[rows[2]], z[rows[2]]);
    // cofactor of entry (s+1, 4): sign (-1)^(s+1+4)
    out[s] = (s % 2 == 0) ? -minor : minor;
  }
  return out;
}

Vec4 cross4_contraction(const Vec4& x, const Vec4& y, const Vec4& z) {
  Vec4 out;
  for (int s = 1; s <= 4; ++s) {
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; q <= 4; ++q) {
        for (int r = 1; r <= 4; ++r) {
          int eps = levi_civita(p, q, r, s);
          if (eps == 0) continue;
          out[s - 1] += x[p - 1] * y[q - 1] * z[r - 1] * Scalar(eps);
        }
      }
    }
  }
  return out;
}

Element<Coord, Scalar> cross4_rule(const Coord& l, const Coord& m, const Coord& n) {
  for (const Coord& c : {l, m, n}) {
    if (c.index < 1 || c.index > 4) throw CarrierMismatch("basis index outside R4: " + to_string(c));
  }
  Element<Coord, Scalar> out;
  for (int s = 1; s <= 4; ++s) {
    int eps = levi_civita(l.index, m.index, n.index, s);
    if (eps != 0) out.add_term(Coord{s}, Scalar(eps));
  }
  return out;
}

std::vector<Coord> cross4_basis() { return {Coord{1}, Coord{2}, Coord{3}, Coord{4}}; }

EndoMatrix<TrigRingElem> rho_theta_symbolic() {
  TrigRingElem one(Scalar(1));
  return rho_theta(TrigRingElem::cos(1), TrigRingElem::sin(1), TrigRingElem::cos(2), TrigRingElem::sin(2), one);
}

EndoMatrix<TruncSeries> rho_theta_series(int order) {
  TruncSeries one = TruncSeries::constant(2, order, 1);
  return rho_theta(series_cos(0, 2, order), series_sin(0, 2, order), series_cos(1, 2, order),
                   series_sin(1, 2, order), one);
}

EndoMatrix<Scalar> rho_theta_exact(const Scalar& c1, const Scalar& s1, const Scalar& c2, const Scalar& s2) {
  if (c1 * c1 + s1 * s1 != Scalar(1) || c2 * c2 + s2 * s2 != Scalar(1)) {
    throw InvalidArgument("rotation needs cos^2 + sin^2 = 1 for both angles");
  }
  return rho_theta(c1, s1, c2, s2, Scalar(1));
}

}  // namespace hnambu
