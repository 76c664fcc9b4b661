// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hnambu/cli.hpp"
#include "hnambu/deformation.hpp"
#include "hnambu/deformation_io.hpp"
#include "hnambu/models/cross4.hpp"
#include "hnambu/models/jacobian3.hpp"
#include "hnambu/models/samples.hpp"
#include "hnambu/models/virasoro_witt.hpp"
#include "json.hpp"

using namespace hnambu;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool timely = elapsed < limit_s;
  bool pass = o.ok && timely;
  if (!pass) ++failures;
  std::printf("criterion %2d %s  %s  [%.2f s, limit %.0f s]%s%s\n", id, pass ? "PASS" : "FAIL", title, elapsed,
              limit_s, o.ok ? (timely ? "" : "  too slow") : "  ", o.ok ? "" : o.detail.c_str());
  std::fflush(stdout);
}

const Scalar kTwoI = Scalar::imaginary_unit() * Scalar(2);

template <class T>
std::span<const T> view(const std::vector<T>& v) {
  return std::span<const T>(v);
}

// det(d q_i / d x_j) over the first three variables.
MultiPoly jacobian_det(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c) {
  const MultiPoly* q[3] = {&a, &b, &c};
  MultiPoly d[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[i][j] = q[i]->partial(j);
  return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

Outcome cross4_counterexample() {
  Outcome o;
  auto c = cli::RunConfig{};
  c.format = cli::Format::json;
  auto result = cli::cmd_counterexample("cross4-theta", c);
  Json j = Json::parse(result.out);
  // values at theta1 = theta2 = pi/2
  o.require(j["lhs"] == "e1 + e2", "lhs " + j["lhs"].dump());
  o.require(j["rhs"] == "-e1 - e2", "rhs " + j["rhs"].dump());
  o.require(j["reproduced"] == true && result.exit_code == cli::kExitOk, "not reproduced");
  return o;
}

Outcome jacobian_counterexample() {
  Outcome o;
  auto c = cli::RunConfig{};
  c.format = cli::Format::json;
  auto result = cli::cmd_counterexample("jacobian-k4", c);
  Json j = Json::parse(result.out);
  const std::vector<std::string> names{"x1", "x2", "x3", "k4"};
  auto P = [&](const std::string& s) { return MultiPoly::parse(s, names); };
  // rho(q) = q(x1, x2, x3 + k4)
  std::vector<MultiPoly> images{P("x1"), P("x2"), P("x3 + k4"), P("k4")};
  auto rho = [&](const MultiPoly& q) { return q.substitute(images); };
  auto br = [&](const MultiPoly& a, const MultiPoly& b, const MultiPoly& w) { return rho(jacobian_det(a, b, w)); };
  MultiPoly x1 = P("x1"), x2 = P("x2"), x3 = P("x3^3"), x4 = P("x1^2"), x5 = P("x2*x3");
  // untwisted Nambu identity for the bracket rho o det J
  MultiPoly lhs = br(x1, x2, br(x3, x4, x5));
  MultiPoly rhs = br(br(x1, x2, x3), x4, x5) + br(x3, br(x1, x2, x4), x5) + br(x3, x4, br(x1, x2, x5));
  o.require(lhs == P("18*x1*(x3 + 2*k4)^2"), "lhs differs from expected: " + lhs.str());
  o.require(rhs == P("6*x1*(x3 + k4)*(3*x3 + 5*k4)"), "rhs differs from expected: " + rhs.str());
  o.require(P(j["lhs"].get<std::string>()) == lhs, "tool lhs " + j["lhs"].dump());
  o.require(P(j["rhs"].get<std::string>()) == rhs, "tool rhs " + j["rhs"].dump());
  // lhs - rhs = 6 x1 k4 (4 x3 + 7 k4): zero for every x exactly when k4 = 0
  MultiPoly diff = lhs - rhs;
  std::vector<MultiPoly> at_zero{P("x1"), P("x2"), P("x3"), P("0")};
  o.require(diff.substitute(at_zero).is_zero(), "difference does not vanish at k4 = 0");
  o.require(diff == P("6*x1*k4*(4*x3 + 7*k4)"), "difference " + diff.str());
  o.require(j["equal_iff"] == "k4 = 0", "tool locus " + j["equal_iff"].dump());
  return o;
}

Outcome cross4_certified() {
  Outcome o;
  auto a = cross4_algebra(Scalar(1));
  auto triples = cross4_default_triples();
  auto tuples = cross4_default_tuples();
  Report skew = check_skew_symmetry(a, view(triples));
  Report nambu = check_hom_nambu_identity(a, view(tuples));
  o.require(skew.sample_size == 64 && skew.passed(), "skew " + std::to_string(skew.violations.size()));
  o.require(nambu.sample_size == 1024 && nambu.passed(), "nambu " + std::to_string(nambu.violations.size()));
  return o;
}

Outcome rho_theta_system() {
  Outcome o;
  Report r = check_cross_endo_equations(rho_theta_symbolic());
  o.require(r.sample_size == 256 && r.passed(), std::to_string(r.violations.size()) + " nonzero residuals");
  return o;
}

Outcome virasoro_witt() {
  Outcome o;
  auto tuples = vw_default_tuples(-2, 2);
  o.require(tuples.size() == 100000, "tuple count");
  for (const Scalar& z : {kTwoI, -kTwoI}) {
    Report r = check_hom_nambu_identity(vw_algebra(z, Scalar(1)), view(tuples));
    o.require(r.passed(), "z = " + z.str() + " fails");
  }
  Report bad = check_hom_nambu_identity(vw_algebra(Scalar(1), Scalar(1)), view(tuples));
  o.require(!bad.passed(), "z = 1 passes");
  if (!bad.passed()) {
    // stored witness from an exhaustive sweep
    o.require(bad.violations.front().witness == "(Q-2, Q-1, Q-2, Q0, R-2)", bad.violations.front().witness);
    o.require(bad.violations.front().residual == "-20*R-7", bad.violations.front().residual);
  }
  return o;
}

template <class Key>
Outcome deformation_passes(const DeformationFamily<Key>& family, const std::vector<FiveTuple<Key>>& tuples,
                           const std::vector<Triple<Key>>& triples, std::size_t expected_size) {
  Outcome o;
  auto report = verify_deformation(family, view(tuples), view(triples));
  o.require(report.sample_size == expected_size, "sample size " + std::to_string(report.sample_size));
  o.require(report.order == family.order(), "order");
  o.require(report.passed(), std::to_string(report.failures.size()) + " failing tuples");
  return o;
}

template <class Key>
bool same_algebra(const TernaryHomAlgebra<Key, Scalar>& a, const TernaryHomAlgebra<Key, Scalar>& b,
                  const std::vector<Triple<Key>>& triples) {
  for (const auto& t : triples) {
    if (a.rule(t[0], t[1], t[2]) != b.rule(t[0], t[1], t[2])) return false;
    if (a.alpha.on_basis(t[0]) != basis(t[0]) || a.beta.on_basis(t[0]) != basis(t[0])) return false;
  }
  return true;
}

Outcome qvw_family() {
  return deformation_passes(build_qvw_deformation(4, kTwoI), vw_default_tuples(-2, 2), vw_default_triples(-2, 2),
                            100000);
}

Outcome cross_family() {
  auto family = build_cross_deformation(6);
  auto triples = cross4_default_triples();
  Outcome o = deformation_passes(family, cross4_default_tuples(), triples, 1024);
  o.require(same_algebra(family.degree_zero(), cross4_algebra(Scalar(1)), triples), "degree 0 differs from cross4");
  return o;
}

Outcome jacobian_family() {
  auto family = build_jacobian_deformation(JacobianShape{}, {Scalar(1), Scalar(1), Scalar(1)}, 4);
  auto triples = jacobian_default_triples(3);
  Outcome o = deformation_passes(family, jacobian_default_tuples(3), triples, 64);
  o.require(family.arity() == 4, "parameter count");
  o.require(same_algebra(family.degree_zero(), jacobian3_algebra(Scalar(1)), triples),
            "degree 0 differs from jacobian3");
  return o;
}

template <class Key, CoefficientRing Ring>
void twisted_suite(Outcome& o, const std::string& label, const TernaryHomAlgebra<Key, Ring>& base,
                   const LinearMap<Key, Ring>& rho, const std::vector<Triple<Key>>& triples,
                   const std::vector<FiveTuple<Key>>& tuples) {
  auto twisted = twist_by_endomorphism(base, rho, view(triples));
  o.require(check_hom_nambu_identity(twisted, view(tuples)).passed(), label + " hom-Nambu");
  o.require(check_skew_symmetry(twisted, view(triples)).passed(), label + " skew");
  o.require(check_multiplicative(twisted, view(triples)).passed(), label + " multiplicative");
  o.require(!twisted.is_nambu(), label + " twist is trivial");
}

Outcome twist_suite() {
  Outcome o;
  twisted_suite(o, "cross4", cross4_algebra(TrigRingElem(Scalar(1))), rho_theta_symbolic().as_map("rho_theta"),
                cross4_default_triples(), cross4_default_tuples());
  GammaMap gamma = parse_gamma("2,1/2,1,3,x2^2,5*x3");
  twisted_suite(o, "jacobian3", jacobian3_algebra(Scalar(1)), gamma_endo(gamma), jacobian_default_triples(3),
                jacobian_default_tuples(3));
  twisted_suite(o, "vw", vw_algebra(kTwoI, laurent_unit()), rho_q_laurent(), vw_default_triples(-2, 2),
                vw_default_tuples(-2, 2));

  // chain rule on random unimodular maps and random polynomials
  std::mt19937 gen(97);
  const std::vector<std::string> names{"x1", "x2", "x3"};
  auto coeff = [&] { return Scalar::fraction(static_cast<long>(gen() % 7) - 3, 1 + gen() % 3); };
  auto random_poly = [&] {
    MultiPoly p(3, names);
    for (int t = 0; t < 4; ++t) p.add_term({int(gen() % 3), int(gen() % 3), int(gen() % 3)}, coeff());
    return p;
  };
  int checked = 0;
  for (int k = 0; k < 120; ++k) {
    Scalar k1 = Scalar::fraction(1 + gen() % 3, 1 + gen() % 2), k2 = Scalar::fraction(1 + gen() % 2, 1);
    MultiPoly p1(3, names), p2(3, names);
    p1.add_term({0, int(gen() % 3), int(gen() % 3)}, coeff());
    p2.add_term({0, 0, int(gen() % 3)}, coeff());
    GammaMap g(Triangular::upper, k1, k2, (k1 * k2).inverse(), MultiPoly::constant(3, coeff()).with_names(names), p1,
               p2);
    auto rho = gamma_endo(g);
    MultiPoly q1 = random_poly(), q2 = random_poly(), q3 = random_poly();
    MultiPoly lhs = jacobian_det(g.apply(q1), g.apply(q2), g.apply(q3));
    MultiPoly rhs = to_poly(rho(to_element(jacobian_det(q1, q2, q3)))) *
                    jacobian_det(g.components()[0], g.components()[1], g.components()[2]);
    o.require(lhs == rhs, "chain rule fails for " + g.str());
    ++checked;
  }
  o.require(checked >= 100, "too few chain-rule samples");
  return o;
}

Outcome infrastructure() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    TruncSeries c = series_cos(0, 1, n), s = series_sin(0, 1, n);
    o.require(c * c + s * s == TruncSeries::constant(1, n, 1), "cos^2 + sin^2 at N = " + std::to_string(n));
  }
  // substitution respects + and *
  std::mt19937 gen(5);
  const std::vector<std::string> names{"x", "y"};
  auto random_poly = [&](int terms) {
    MultiPoly p(2, names);
    for (int t = 0; t < terms; ++t)
      p.add_term({int(gen() % 4), int(gen() % 4)}, Scalar::fraction(static_cast<long>(gen() % 9) - 4, 1 + gen() % 4));
    return p;
  };
  for (int k = 0; k < 50; ++k) {
    std::vector<MultiPoly> images{random_poly(3), random_poly(2)};
    MultiPoly a = random_poly(4), b = random_poly(4);
    o.require((a * b).substitute(images) == a.substitute(images) * b.substitute(images), "substitution product");
    o.require((a + b).substitute(images) == a.substitute(images) + b.substitute(images), "substitution sum");
  }
  // save/load round trip
  auto family = build_qvw_deformation(3, kTwoI);
  auto gens = vw_generators(-2, 2);
  std::string text = save_family(family, view(gens));
  o.require(save_family(load_family<Generator>(text), view(gens)) == text, "qvw round trip");
  auto jac = build_jacobian_deformation(JacobianShape{}, {Scalar(1), Scalar(1), Scalar(1)}, 2);
  auto monomials = monomials_up_to(2);
  std::string jtext = save_family(jac, view(monomials));
  o.require(save_family(load_family<Monomial>(jtext), view(monomials)) == jtext, "jacobian round trip");
  // reports are deterministic
  cli::RunConfig c;
  c.model = "vw";
  c.z = "1";
  c.range = "-1..1";
  c.format = cli::Format::json;
  auto first = cli::cmd_verify(c), second = cli::cmd_verify(c);
  o.require(first.out == second.out && first.exit_code == cli::kExitViolations, "vw z = 1 report varies");
  c = cli::RunConfig{};
  c.model = "cross4";
  c.order = 2;
  o.require(cli::cmd_deform(c).out == cli::cmd_deform(c).out, "deform report varies");
  return o;
}

}  // namespace

int main() {
  criterion(1, "cross4 rotation counterexample (lhs e1 + e2, rhs -e1 - e2)", 1, cross4_counterexample);
  criterion(2, "jacobian translation counterexample, equality iff k4 = 0", 1, jacobian_counterexample);
  criterion(3, "cross4 skew-symmetry (64) and Nambu identity (1024)", 5, cross4_certified);
  criterion(4, "rotation endomorphism system, 256 residuals", 10, rho_theta_system);
  criterion(5, "Virasoro-Witt Nambu at z = +-2i, violation at z = 1", 120, virasoro_witt);
  criterion(6, "q-Virasoro-Witt deformation, N = 4", 300, qvw_family);
  criterion(7, "cross4 two-parameter deformation, N = 6", 120, cross_family);
  criterion(8, "jacobian four-parameter deformation, N = 4", 300, jacobian_family);
  criterion(9, "twisted algebras and chain rule", 600, twist_suite);
  criterion(10, "series, substitution, round trip, determinism", 120, infrastructure);
  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
