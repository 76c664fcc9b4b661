#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hnambu/checks.hpp"
#include "hnambu/keys.hpp"
#include "hnambu/series.hpp"

namespace hnambu {

/// A formal parameter t_k and what it stands for in the construction.
struct Parameter {
  std::string name;
  std::string meaning;
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// All multi-indices of the given arity with total degree <= order, graded.
std::vector<MultiIndex> multi_indices(std::size_t arity, int order);

/// Coefficient of t^i in a series-valued element.
template <class Key>
Element<Key, Scalar> coefficient(const Element<Key, TruncSeries>& e, const MultiIndex& index) {
  Element<Key, Scalar> out;
  for (const auto& [k, c] : e.terms()) out.add_term(k, c.coefficient(index));
  return out;
}

/// Re-truncates every coefficient to a smaller order.
template <class Key>
Element<Key, TruncSeries> truncate_element(const Element<Key, TruncSeries>& e, int order) {
  Element<Key, TruncSeries> out;
  for (const auto& [k, c] : e.terms()) out.add_term(k, c.truncated(order));
  return out;
}

/// n-parameter formal deformation
///   [., ., .]_t = sum_i [., ., .]_i t^i,  alpha_t = sum_i alpha_i t^i,
///   beta_t = sum_i beta_i t^i,
/// held modulo total degree N + 1.
///
/// Builders supply the series-valued maps in closed form on basis keys; the
/// graded components are read off by taking coefficients. Closures are
/// memoized and the caches are not synchronized.
template <class Key>
class DeformationFamily {
 public:
  using SeriesElem = Element<Key, TruncSeries>;
  using Component = Element<Key, Scalar>;
  using BracketSeries = std::function<SeriesElem(const Key&, const Key&, const Key&)>;
  using TwistSeries = std::function<SeriesElem(const Key&)>;

  DeformationFamily(std::string base_id, std::string carrier, std::vector<Parameter> parameters, int order,
                    BracketSeries bracket, TwistSeries alpha, TwistSeries beta)
      : base_id_(std::move(base_id)),
        carrier_(std::move(carrier)),
        parameters_(std::move(parameters)),
        order_(order),
        alpha_(memoize<Key, TruncSeries>(std::move(alpha))),
        beta_(memoize<Key, TruncSeries>(std::move(beta))) {
    if (parameters_.empty()) throw InvalidArgument("a deformation needs at least one parameter");
    if (order < 0) throw InvalidArgument("truncation order must be >= 0");
    auto cache = std::make_shared<std::map<Triple<Key>, SeriesElem>>();
    bracket_ = [inner = std::move(bracket), cache](const Key& a, const Key& b, const Key& c) {
      Triple<Key> t{a, b, c};
      auto it = cache->find(t);
      if (it != cache->end()) return it->second;
      SeriesElem v = inner(a, b, c);
      cache->emplace(t, v);
      return v;
    };
  }

  const std::string& base_id() const { return base_id_; }
  const std::string& carrier() const { return carrier_; }
  const std::vector<Parameter>& parameters() const { return parameters_; }
  std::size_t arity() const { return parameters_.size(); }
  int order() const { return order_; }
  std::vector<std::string> parameter_names() const {
    std::vector<std::string> out;
    for (const auto& p : parameters_) out.push_back(p.name);
    return out;
  }

  TruncSeries unit() const { return TruncSeries::constant(arity(), order_, 1); }

  SeriesElem bracket_series(const Key& a, const Key& b, const Key& c) const { return bracket_(a, b, c); }
  SeriesElem alpha_series(const Key& k) const { return alpha_(k); }
  SeriesElem beta_series(const Key& k) const { return beta_(k); }

  Component bracket_component(const MultiIndex& i, const Key& a, const Key& b, const Key& c) const {
    check_index(i);
    return coefficient(bracket_(a, b, c), i);
  }
  Component alpha_component(const MultiIndex& i, const Key& k) const {
    check_index(i);
    return coefficient(alpha_(k), i);
  }
  Component beta_component(const MultiIndex& i, const Key& k) const {
    check_index(i);
    return coefficient(beta_(k), i);
  }

  std::vector<MultiIndex> indices() const { return multi_indices(arity(), order_); }

  /// The family as a hom-Nambu algebra over K[[t]] / (degree > N).
  TernaryHomAlgebra<Key, TruncSeries> algebra() const {
    using Map = LinearMap<Key, TruncSeries>;
    return TernaryHomAlgebra<Key, TruncSeries>{base_id_ + "[[" + join_names() + "]]/N=" + std::to_string(order_),
                                               carrier_,
                                               unit(),
                                               bracket_,
                                               Map(MapKind::custom, "alpha_t", alpha_),
                                               Map(MapKind::custom, "beta_t", beta_)};
  }

  /// The |i| = 0 components as an algebra over the base field.
  TernaryHomAlgebra<Key, Scalar> degree_zero() const {
    using Map = LinearMap<Key, Scalar>;
    MultiIndex zero{Exponents(arity(), 0)};
    auto bracket = bracket_;
    auto alpha = alpha_;
    auto beta = beta_;
    return TernaryHomAlgebra<Key, Scalar>{
        base_id_, carrier_, Scalar(1),
        [bracket, zero](const Key& a, const Key& b, const Key& c) { return coefficient(bracket(a, b, c), zero); },
        Map(MapKind::custom, "alpha_0", [alpha, zero](const Key& k) { return coefficient(alpha(k), zero); }),
        Map(MapKind::custom, "beta_0", [beta, zero](const Key& k) { return coefficient(beta(k), zero); })};
  }

  /// Same family modulo total degree `order` + 1.
  DeformationFamily truncated(int order) const {
    if (order > order_) throw InvalidArgument("cannot raise the truncation order of a family");
    auto bracket = bracket_;
    auto alpha = alpha_;
    auto beta = beta_;
    return DeformationFamily(
        base_id_, carrier_, parameters_, order,
        [bracket, order](const Key& a, const Key& b, const Key& c) { return truncate_element(bracket(a, b, c), order); },
        [alpha, order](const Key& k) { return truncate_element(alpha(k), order); },
        [beta, order](const Key& k) { return truncate_element(beta(k), order); });
  }

 private:
  void check_index(const MultiIndex& i) const {
    if (i.arity() != arity()) throw ArityMismatch("multi-index arity differs from parameter count");
  }

  std::string join_names() const {
    std::string out;
    for (std::size_t k = 0; k < parameters_.size(); ++k) out += (k ? "," : "") + parameters_[k].name;
    return out;
  }

  std::string base_id_;
  std::string carrier_;
  std::vector<Parameter> parameters_;
  int order_;
  BracketSeries bracket_;
  TwistSeries alpha_;
  TwistSeries beta_;
};

/// sum_i [x, y, z]_i t^i for series-valued inputs.
template <class Key>
Element<Key, TruncSeries> eval_deformed_bracket(const DeformationFamily<Key>& family,
                                                const Element<Key, TruncSeries>& x,
                                                const Element<Key, TruncSeries>& y,
                                                const Element<Key, TruncSeries>& z) {
  for (const auto* e : {&x, &y, &z}) {
    for (const auto& [k, c] : e->terms()) {
      if (c.arity() != family.arity() || c.order() != family.order()) {
        throw ArityMismatch("input coefficients do not match the family's parameters and order");
      }
    }
  }
  return family.algebra().bracket(x, y, z);
}

/// Coefficients of t^i (|i| <= N) of the hom-Nambu residual on one tuple;
/// only nonzero coefficients are listed.
template <class Key>
struct OrderedResidual {
  std::string witness;
  std::vector<std::pair<MultiIndex, Element<Key, Scalar>>> coefficients;
  bool passed() const { return coefficients.empty(); }
};

template <class Key>
struct DeformationReport {
  std::string base_id;
  std::vector<Parameter> parameters;
  int order = 0;
  std::size_t sample_size = 0;
  /// Tuples whose residual has a nonzero coefficient.
  std::vector<OrderedResidual<Key>> failures;
  /// failures_by_degree[d]: tuples with a nonzero coefficient of total degree d.
  std::vector<std::size_t> failures_by_degree;
  /// Skew-symmetry of the series bracket, i.e. of every component at once.
  Report skew;

  bool passed() const { return failures.empty() && skew.passed(); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["check"] = "formal-deformation";
    j["base"] = base_id;
    j["parameters"] = nlohmann::ordered_json::array();
    for (const auto& p : parameters) j["parameters"].push_back({{"name", p.name}, {"meaning", p.meaning}});
    j["order"] = order;
    j["sample_size"] = sample_size;
    j["passed"] = passed();
    j["degrees"] = nlohmann::ordered_json::array();
    for (std::size_t d = 0; d < failures_by_degree.size(); ++d) {
      j["degrees"].push_back({{"degree", d}, {"failing_tuples", failures_by_degree[d]}});
    }
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (const auto& [i, e] : f.coefficients) coeffs.push_back({{"index", i.str()}, {"coefficient", e.str()}});
      j["violations"].push_back({{"witness", f.witness}, {"coefficients", coeffs}});
    }
    j["skew_symmetry"] = skew.to_json();
    return j;
  }

  std::string to_text(std::size_t max_listed = 5) const {
    std::ostringstream out;
    out << "formal deformation of " << base_id << " in ";
    for (std::size_t k = 0; k < parameters.size(); ++k) {
      out << (k ? ", " : "") << parameters[k].name << " (" << parameters[k].meaning << ")";
    }
    out << "\nidentity checked modulo total degree " << order + 1 << " on " << sample_size << " tuples\n";
    out << "degree  failing-tuples  status\n";
    for (std::size_t d = 0; d < failures_by_degree.size(); ++d) {
      out << d << std::string(8 - std::to_string(d).size(), ' ') << failures_by_degree[d]
          << std::string(16 - std::to_string(failures_by_degree[d]).size(), ' ')
          << (failures_by_degree[d] == 0 ? "pass" : "FAIL") << "\n";
    }
    for (std::size_t k = 0; k < failures.size() && k < max_listed; ++k) {
      out << "  witness " << failures[k].witness << "\n";
      for (const auto& [i, e] : failures[k].coefficients) out << "    t^(" << i.str() << "): " << e.str() << "\n";
    }
    if (failures.size() > max_listed) out << "  ... " << failures.size() - max_listed << " more\n";
    out << skew.to_text(max_listed);
    out << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }
};

/// Expands the hom-Nambu residual of the series-valued bracket and twists
/// on each tuple and collects every coefficient of t^i, |i| <= N. Also
/// checks skew-symmetry of the bracket on `skew_triples`.
template <class Key>
DeformationReport<Key> verify_deformation(const DeformationFamily<Key>& family, std::span<const FiveTuple<Key>> tuples,
                                          std::span<const Triple<Key>> skew_triples) {
  DeformationReport<Key> report;
  report.base_id = family.base_id();
  report.parameters = family.parameters();
  report.order = family.order();
  report.sample_size = tuples.size();
  report.failures_by_degree.assign(static_cast<std::size_t>(family.order()) + 1, 0);
  auto alg = family.algebra();
  const auto indices = family.indices();
  for (const auto& t : tuples) {
    auto residual = hom_nambu_sides(alg, t).residual;
    if (residual.is_zero()) continue;
    OrderedResidual<Key> r{witness_str(t), {}};
    std::vector<bool> degree_hit(report.failures_by_degree.size(), false);
    for (const auto& i : indices) {
      auto c = coefficient(residual, i);
      if (c.is_zero()) continue;
      degree_hit[static_cast<std::size_t>(i.total())] = true;
      r.coefficients.emplace_back(i, std::move(c));
    }
    for (std::size_t d = 0; d < degree_hit.size(); ++d) report.failures_by_degree[d] += degree_hit[d] ? 1 : 0;
    report.failures.push_back(std::move(r));
  }
  report.skew = check_skew_symmetry(alg, skew_triples);
  return report;
}

/// Every ordered triple of the keys that occur in `tuples`.
template <class Key>
std::vector<Triple<Key>> triples_from_tuples(std::span<const FiveTuple<Key>> tuples) {
  std::set<Key> keys;
  for (const auto& t : tuples)
    for (const auto& e : t)
      for (const auto& [k, c] : e.terms()) keys.insert(k);
  std::vector<Key> list(keys.begin(), keys.end());
  return all_triples<Key>(list);
}

// Concrete families.

/// q-Virasoro-Witt with q = 1 + t. Refuses z outside {2i, -2i} unless
/// `allow_any_z`, since the base is Nambu-Lie only there.
DeformationFamily<Generator> build_qvw_deformation(int order, const Scalar& z, bool allow_any_z = false);

/// Deformed cross-product with (t1, t2) = (theta1, theta2) and cos, sin
/// replaced by their truncated series.
DeformationFamily<Coord> build_cross_deformation(int order);

/// Which coefficients of p1 in K[x2, x3] and p2 in K[x3] become parameters:
/// all monomials of degree 1..p*_degree (degree 0 too when
/// include_constants is set).
struct JacobianShape {
  int p1_degree = 1;
  int p2_degree = 1;
  bool include_constants = false;
};

/// Deformed Jacobian bracket. t1 = k4, then one parameter per p1
/// coefficient, then per p2 coefficient. k = (k1, k2, k3) is fixed with
/// k1 k2 k3 = 1; the base is jacobian3 twisted by x_j -> k_j x_j.
DeformationFamily<Monomial> build_jacobian_deformation(const JacobianShape& shape, const std::array<Scalar, 3>& k,
                                                       int order);

}  // namespace hnambu
