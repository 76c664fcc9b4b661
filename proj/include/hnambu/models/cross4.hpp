#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hnambu/checks.hpp"
#include "hnambu/keys.hpp"
#include "hnambu/series.hpp"
#include "hnambu/trig.hpp"

namespace hnambu {

/// Sign of the permutation (i, j, k, l) of (1, 2, 3, 4); zero on repeats.
int levi_civita(int i, int j, int k, int l);

using Vec4 = std::array<Scalar, 4>;

/// det | x y z e |, expanded by cofactors along the basis column.
Vec4 cross4_determinant(const Vec4& x, const Vec4& y, const Vec4& z);
/// eps^s_{pqr} x^p y^q z^r e_s.
Vec4 cross4_contraction(const Vec4& x, const Vec4& y, const Vec4& z);

/// [e_l, e_m, e_n] = eps^s_{lmn} e_s. Throws CarrierMismatch off 1..4.
Element<Coord, Scalar> cross4_rule(const Coord& l, const Coord& m, const Coord& n);

std::vector<Coord> cross4_basis();

template <CoefficientRing Ring>
TernaryHomAlgebra<Coord, Ring> cross4_algebra(const Ring& one) {
  return nambu_algebra<Coord, Ring>("cross4", "R4", one, cross4_rule);
}

/// 4x4 matrix over a coefficient ring with rho(e_l) = sum_i a(i, l) e_i
/// (indices 1-based, column l holds the image of e_l).
template <CoefficientRing Ring>
class EndoMatrix {
 public:
  explicit EndoMatrix(const Ring& one) : one_(one), a_(16, one * Scalar(0)) {}

  static EndoMatrix identity(const Ring& one) {
    EndoMatrix m(one);
    for (int i = 1; i <= 4; ++i) m.at(i, i) = one;
    return m;
  }

  Ring& at(int i, int l) { return a_[4 * (i - 1) + (l - 1)]; }
  const Ring& at(int i, int l) const { return a_[4 * (i - 1) + (l - 1)]; }
  const Ring& one() const { return one_; }

  friend EndoMatrix operator*(const EndoMatrix& x, const EndoMatrix& y) {
    EndoMatrix out(x.one_);
    for (int i = 1; i <= 4; ++i)
      for (int l = 1; l <= 4; ++l)
        for (int k = 1; k <= 4; ++k) out.at(i, l) = out.at(i, l) + x.at(i, k) * y.at(k, l);
    return out;
  }

  EndoMatrix scaled(const Scalar& s) const {
    EndoMatrix out = *this;
    for (auto& v : out.a_) v = v * s;
    return out;
  }

  Element<Coord, Ring> image(const Coord& l) const {
    if (l.index < 1 || l.index > 4) throw CarrierMismatch("basis index outside R4: " + to_string(l));
    Element<Coord, Ring> out;
    for (int i = 1; i <= 4; ++i) out.add_term(Coord{i}, at(i, l.index));
    return out;
  }

  LinearMap<Coord, Ring> as_map(std::string name) const {
    EndoMatrix copy = *this;
    return LinearMap<Coord, Ring>(MapKind::matrix, std::move(name),
                                  [copy](const Coord& l) { return copy.image(l); });
  }

  friend bool operator==(const EndoMatrix& x, const EndoMatrix& y) { return x.a_ == y.a_; }

  std::string str() const {
    std::string out;
    for (int i = 1; i <= 4; ++i) {
      out += "[";
      for (int l = 1; l <= 4; ++l) out += (l > 1 ? ", " : "") + to_string(at(i, l));
      out += "]\n";
    }
    return out;
  }

 private:
  Ring one_;
  std::vector<Ring> a_;  // row-major
};

/// Rotation by angle theta in the e_p e_q plane, given by its cosine and sine:
/// e_p -> c e_p + s e_q, e_q -> -s e_p + c e_q.
template <CoefficientRing Ring>
EndoMatrix<Ring> plane_rotation(int p, int q, const Ring& c, const Ring& s, const Ring& one) {
  EndoMatrix<Ring> m = EndoMatrix<Ring>::identity(one);
  m.at(p, p) = c;
  m.at(q, p) = s;
  m.at(p, q) = -s;
  m.at(q, q) = c;
  return m;
}

/// rho_theta = R_13(theta1) R_24(theta2) from (cos, sin) pairs.
template <CoefficientRing Ring>
EndoMatrix<Ring> rho_theta(const Ring& c1, const Ring& s1, const Ring& c2, const Ring& s2, const Ring& one) {
  return plane_rotation(1, 3, c1, s1, one) * plane_rotation(2, 4, c2, s2, one);
}

/// Symbolic rotation over the trigonometric quotient ring.
EndoMatrix<TrigRingElem> rho_theta_symbolic();
/// Parameters (t1, t2) = (theta1, theta2), cos/sin as truncated series.
EndoMatrix<TruncSeries> rho_theta_series(int order);
/// Exact (cos, sin) values; rejects pairs with c^2 + s^2 != 1.
EndoMatrix<Scalar> rho_theta_exact(const Scalar& c1, const Scalar& s1, const Scalar& c2, const Scalar& s2);

/// Residuals eps^s_{lmn} a^t_s - eps^t_{pqr} a^p_l a^q_m a^r_n over all
/// 1 <= l, m, n, t <= 4. Zero residuals mean rho is an endomorphism of the
/// cross-product.
template <CoefficientRing Ring>
Report check_cross_endo_equations(const EndoMatrix<Ring>& a, std::string matrix_id = "rho") {
  Report report{"cross4-endomorphism-equations", matrix_id, 256, {}};
  for (int l = 1; l <= 4; ++l) {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (int t = 1; t <= 4; ++t) {
          Ring residual = a.one() * Scalar(0);
          for (int s = 1; s <= 4; ++s) {
            int eps = levi_civita(l, m, n, s);
            if (eps != 0) residual = residual + a.at(t, s) * Scalar(eps);
          }
          for (int p = 1; p <= 4; ++p) {
            for (int q = 1; q <= 4; ++q) {
              for (int r = 1; r <= 4; ++r) {
                int eps = levi_civita(p, q, r, t);
                if (eps == 0) continue;
                residual = residual - a.at(p, l) * a.at(q, m) * a.at(r, n) * Scalar(eps);
              }
            }
          }
          if (!residual.is_zero()) {
            report.violations.push_back({"(l,m,n,t)=(" + std::to_string(l) + "," + std::to_string(m) + "," +
                                             std::to_string(n) + "," + std::to_string(t) + ")",
                                         to_string(residual)});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace hnambu
