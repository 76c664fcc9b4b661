#include <fstream>
#include <sstream>

#include "hnambu/cli.hpp"
#include "hnambu/deformation.hpp"
#include "hnambu/deformation_io.hpp"
#include "hnambu/models/cross4.hpp"
#include "hnambu/models/jacobian3.hpp"
#include "hnambu/models/samples.hpp"
#include "hnambu/models/virasoro_witt.hpp"

namespace hnambu::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int parse_count(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(std::string(text), &used);
    if (used != text.size() || value < 0) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
}

Scalar parse_scalar(std::string_view text, std::string_view what) {
  try {
    return Scalar::parse(text);
  } catch (const Error& e) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "': " + e.what());
  }
}

struct VerifyOutcome {
  std::string algebra;
  std::string carrier;
  std::vector<Report> reports;
};

template <class Key, class Ring>
VerifyOutcome run_checks(const TernaryHomAlgebra<Key, Ring>& a, const std::vector<Triple<Key>>& triples,
                         const std::vector<FiveTuple<Key>>& tuples, bool plain) {
  std::span<const Triple<Key>> tri(triples);
  std::span<const FiveTuple<Key>> tup(tuples);
  VerifyOutcome out{a.id, a.carrier, {}};
  out.reports.push_back(check_skew_symmetry(a, tri));
  out.reports.push_back(check_hom_nambu_identity(plain ? plain_nambu(a) : a, tup));
  out.reports.push_back(check_multiplicative(a, tri));
  return out;
}

template <class Key, class Ring>
VerifyOutcome run_twisted(const TernaryHomAlgebra<Key, Ring>& base, const LinearMap<Key, Ring>& rho,
                          const std::vector<Triple<Key>>& triples, const std::vector<FiveTuple<Key>>& tuples,
                          bool plain) {
  auto twisted = twist_by_endomorphism(base, rho, std::span<const Triple<Key>>(triples));
  return run_checks(twisted, triples, tuples, plain);
}

VerifyOutcome verify_cross4(const RunConfig& config) {
  auto triples = cross4_default_triples();
  auto tuples = cross4_default_tuples();
  if (!config.theta) return run_checks(cross4_algebra(Scalar(1)), triples, tuples, config.plain_nambu);
  tuples.insert(tuples.begin(), cross4_theta_witness());
  const std::string& theta = *config.theta;
  if (theta == "symbolic") {
    auto rho = rho_theta_symbolic().as_map("rho_theta");
    return run_twisted(cross4_algebra(TrigRingElem(1)), rho, triples, tuples, config.plain_nambu);
  }
  if (theta.rfind("series:", 0) == 0) {
    int order = parse_count(theta.substr(7), "series order");
    auto rho = rho_theta_series(order).as_map("rho_theta");
    return run_twisted(cross4_algebra(TruncSeries::constant(2, order, 1)), rho, triples, tuples, config.plain_nambu);
  }
  if (theta.rfind("exact:", 0) == 0) {
    std::vector<Scalar> v;
    std::istringstream in(theta.substr(6));
    std::string field;
    while (std::getline(in, field, ',')) v.push_back(parse_scalar(field, "theta value"));
    if (v.size() != 4) throw UsageError("--theta exact: needs c1,s1,c2,s2");
    EndoMatrix<Scalar> m = [&] {
      try {
        return rho_theta_exact(v[0], v[1], v[2], v[3]);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
    }();
    auto rho = m.as_map("rho_theta(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "," + v[3].str() + ")");
    return run_twisted(cross4_algebra(Scalar(1)), rho, triples, tuples, config.plain_nambu);
  }
  throw UsageError("bad --theta '" + theta + "' (exact:c1,s1,c2,s2 | series:N | symbolic)");
}

GammaMap parse_gamma_flag(const std::string& spec) {
  try {
    return parse_gamma(spec);
  } catch (const Error& e) {
    throw UsageError(std::string("bad --gamma: ") + e.what());
  }
}

VerifyOutcome verify_jacobian(const RunConfig& config) {
  int degree = config.degree.value_or(3);
  auto triples = jacobian_default_triples(degree);
  auto tuples = jacobian_default_tuples(degree);
  if (!config.gamma) return run_checks(jacobian3_algebra(Scalar(1)), triples, tuples, config.plain_nambu);
  GammaMap gamma = parse_gamma_flag(*config.gamma);
  try {
    if (gamma.parameter_count() == 0) {
      return run_twisted(jacobian3_algebra(Scalar(1)), gamma_endo(gamma), triples, tuples, config.plain_nambu);
    }
    return run_twisted(jacobian3_algebra(parameter_unit(gamma)), gamma_endo_symbolic(gamma), triples, tuples,
                       config.plain_nambu);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::string tuple_warning(int lo, int hi) {
  if (lo >= -2 && hi <= 2) return "";
  std::size_t n = 2 * static_cast<std::size_t>(hi - lo + 1);
  return "warning: range " + std::to_string(lo) + ".." + std::to_string(hi) + " gives " +
         std::to_string(n * n * n * n * n) + " tuples\n";
}

VerifyOutcome verify_vw(const RunConfig& config, std::string& warning) {
  Scalar z = parse_scalar(config.z.value_or("2i"), "--z");
  auto [lo, hi] = parse_range(config.range.value_or("-2..2"));
  warning = tuple_warning(lo, hi);
  auto triples = vw_default_triples(lo, hi);
  auto tuples = vw_default_tuples(lo, hi);
  if (!config.q) return run_checks(vw_algebra(z, Scalar(1)), triples, tuples, config.plain_nambu);
  const std::string& q = *config.q;
  try {
    if (q == "laurent") {
      return run_twisted(vw_algebra(z, laurent_unit()), rho_q_laurent(), triples, tuples, config.plain_nambu);
    }
    if (q.rfind("series:", 0) == 0) {
      int order = parse_count(q.substr(7), "series order");
      return run_twisted(vw_algebra(z, TruncSeries::constant(1, order, 1)), rho_q_series(order), triples, tuples,
                         config.plain_nambu);
    }
    return run_twisted(vw_algebra(z, Scalar(1)), rho_q_scalar(parse_scalar(q, "--q")), triples, tuples,
                       config.plain_nambu);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

Element<Coord, Scalar> coords(std::initializer_list<std::pair<int, int>> terms) {
  Element<Coord, Scalar> out;
  for (const auto& [i, c] : terms) out.add_term(Coord{i}, Scalar(c));
  return out;
}

CommandResult counterexample_cross4(const RunConfig& config) {
  auto base = cross4_algebra(Scalar(1));
  auto rho = rho_theta_exact(0, 1, 0, 1).as_map("rho_theta");
  auto triples = cross4_default_triples();
  auto twisted = twist_by_endomorphism(base, rho, std::span<const Triple<Coord>>(triples));
  auto witness = cross4_theta_witness();
  auto sides = hom_nambu_sides(plain_nambu(twisted), witness);
  auto expected_lhs = coords({{1, 1}, {2, 1}});
  auto expected_rhs = coords({{1, -1}, {2, -1}});
  bool reproduced = sides.lhs == expected_lhs && sides.rhs == expected_rhs;

  CommandResult result;
  result.exit_code = reproduced ? kExitOk : kExitViolations;
  if (config.format == Format::json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "counterexample";
    j["name"] = "cross4-theta";
    j["algebra"] = twisted.id;
    j["theta"] = {{"c1", "0"}, {"s1", "1"}, {"c2", "0"}, {"s2", "1"}};
    j["witness"] = witness_str(witness);
    j["lhs"] = sides.lhs.str();
    j["rhs_terms"] = Json::array();
    for (const auto& t : sides.rhs_terms) j["rhs_terms"].push_back(t.str());
    j["rhs"] = sides.rhs.str();
    j["residual"] = sides.residual.str();
    j["expected_lhs"] = expected_lhs.str();
    j["expected_rhs"] = expected_rhs.str();
    j["reproduced"] = reproduced;
    result.out = dump(j);
    return result;
  }
  std::ostringstream out;
  out << "deformed cross-product " << twisted.id << " at (c1, s1, c2, s2) = (0, 1, 0, 1)\n";
  out << "witness (x1, ..., x5) = " << witness_str(witness) << "\n";
  out << "[x1, x2, [x3, x4, x5]]          = " << sides.lhs.str() << "\n";
  out << "[[x1, x2, x3], x4, x5]          = " << sides.rhs_terms[0].str() << "\n";
  out << "[x3, [x1, x2, x4], x5]          = " << sides.rhs_terms[1].str() << "\n";
  out << "[x3, x4, [x1, x2, x5]]          = " << sides.rhs_terms[2].str() << "\n";
  out << "sum of the three terms          = " << sides.rhs.str() << "\n";
  out << "residual                        = " << sides.residual.str() << "\n";
  out << "expected lhs " << expected_lhs.str() << ", rhs " << expected_rhs.str() << ": "
      << (reproduced ? "reproduced" : "NOT reproduced") << "\n";
  result.out = out.str();
  return result;
}

/// sum_m c_m(k4) x^m as one polynomial in (x1, x2, x3, k4).
MultiPoly joint_poly(const Element<Monomial, MultiPoly>& e) {
  MultiPoly out(4, {"x1", "x2", "x3", "k4"});
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [pe, pc] : c.terms()) out.add_term({m.exponents[0], m.exponents[1], m.exponents[2], pe[0]}, pc);
  }
  return out;
}

std::string locus(const MultiPoly& difference) {
  if (difference.is_zero()) return "all k4";
  MultiPoly g(1, {"k4"});
  for (const auto& [x, coeff] : split_leading(difference, 3)) g = univariate_gcd(g, coeff);
  if (g.is_constant()) return "no k4";
  if (g.terms().size() == 1) return "k4 = 0";
  return g.str() + " = 0";
}

CommandResult counterexample_jacobian(const RunConfig& config) {
  GammaMap gamma = GammaMap::translation_k4();
  auto base = jacobian3_algebra(parameter_unit(gamma));
  auto rho = gamma_endo_symbolic(gamma);
  auto triples = jacobian_default_triples(3);
  auto twisted = twist_by_endomorphism(base, rho, std::span<const Triple<Monomial>>(triples));
  auto witness = jacobian_k4_witness();
  auto sides = hom_nambu_sides(plain_nambu(twisted), witness);

  const std::vector<std::string> names{"x1", "x2", "x3", "k4"};
  const std::string expected_lhs_text = "18*x1*(x3 + 2*k4)^2";
  const std::string expected_rhs_text = "6*x1*(x3 + k4)*(3*x3 + 5*k4)";
  MultiPoly lhs = joint_poly(sides.lhs);
  MultiPoly rhs = joint_poly(sides.rhs);
  std::array<MultiPoly, 3> terms{joint_poly(sides.rhs_terms[0]), joint_poly(sides.rhs_terms[1]),
                                 joint_poly(sides.rhs_terms[2])};
  MultiPoly expected_lhs = MultiPoly::parse(expected_lhs_text, names);
  MultiPoly expected_rhs = MultiPoly::parse(expected_rhs_text, names);
  bool matches = lhs == expected_lhs && rhs == expected_rhs;
  std::string equal_iff = locus(lhs - rhs);

  std::optional<Scalar> bound;
  if (config.k4) bound = parse_scalar(*config.k4, "--k4");
  auto bind = [&](const MultiPoly& p) {
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < 3; ++v) images.push_back(MultiPoly::variable(4, v).with_names(names));
    images.push_back(MultiPoly::constant(4, *bound).with_names(names));
    return p.substitute(images);
  };

  CommandResult result;
  result.exit_code = matches && equal_iff == "k4 = 0" ? kExitOk : kExitViolations;
  if (config.format == Format::json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "counterexample";
    j["name"] = "jacobian-k4";
    j["algebra"] = twisted.id;
    j["gamma"] = gamma.str();
    j["witness"] = witness_str(witness);
    j["lhs"] = lhs.str();
    j["rhs_terms"] = Json::array();
    for (const auto& t : terms) j["rhs_terms"].push_back(t.str());
    j["rhs"] = rhs.str();
    j["difference"] = (lhs - rhs).str();
    j["expected_lhs"] = expected_lhs_text;
    j["expected_rhs"] = expected_rhs_text;
    j["lhs_matches_expected"] = lhs == expected_lhs;
    j["rhs_matches_expected"] = rhs == expected_rhs;
    j["equal_iff"] = equal_iff;
    if (bound) {
      j["k4"] = bound->str();
      j["bound_lhs"] = bind(lhs).str();
      j["bound_rhs"] = bind(rhs).str();
      j["sides_equal"] = bind(lhs) == bind(rhs);
    }
    j["reproduced"] = result.exit_code == kExitOk;
    result.out = dump(j);
    return result;
  }
  std::ostringstream out;
  out << "deformed Jacobian " << twisted.id << " with gamma = " << gamma.str() << "\n";
  out << "witness (q1, ..., q5) = " << witness_str(witness) << "\n";
  out << "[q1, q2, [q3, q4, q5]] = " << lhs.str() << "\n";
  out << "  expected " << expected_lhs_text << ": " << (lhs == expected_lhs ? "match" : "MISMATCH") << "\n";
  out << "[[q1, q2, q3], q4, q5] = " << terms[0].str() << "\n";
  out << "[q3, [q1, q2, q4], q5] = " << terms[1].str() << "\n";
  out << "[q3, q4, [q1, q2, q5]] = " << terms[2].str() << "\n";
  out << "sum of the three terms = " << rhs.str() << "\n";
  out << "  expected " << expected_rhs_text << ": " << (rhs == expected_rhs ? "match" : "MISMATCH") << "\n";
  out << "difference = " << (lhs - rhs).str() << "\n";
  out << "sides equal iff " << equal_iff << "\n";
  if (bound) {
    out << "at k4 = " << bound->str() << ": lhs = " << bind(lhs).str() << ", rhs = " << bind(rhs).str() << ", "
        << (bind(lhs) == bind(rhs) ? "equal" : "different") << "\n";
  }
  result.out = out.str();
  return result;
}

template <class Key>
CommandResult deform_result(const DeformationFamily<Key>& family, const std::vector<FiveTuple<Key>>& tuples,
                            const std::vector<Triple<Key>>& triples, const std::vector<Key>& support,
                            const RunConfig& config, std::string warning) {
  auto report = verify_deformation(family, std::span<const FiveTuple<Key>>(tuples),
                                   std::span<const Triple<Key>>(triples));
  CommandResult result{report.passed() ? kExitOk : kExitViolations, "", std::move(warning)};
  if (config.save) {
    std::ofstream file(*config.save, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + *config.save + "'");
    file << save_family(family, std::span<const Key>(support));
  }
  if (config.format == Format::json) {
    Json j = report.to_json();
    j["command"] = "deform";
    result.out = dump(j);
  } else {
    result.out = report.to_text();
  }
  return result;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    validate(config, "verify");
    const ModelInfo& model = find_model(config.model);
    std::string warning;
    VerifyOutcome outcome;
    if (model.id == "cross4") {
      outcome = verify_cross4(config);
    } else if (model.id == "jacobian3") {
      outcome = verify_jacobian(config);
    } else {
      outcome = verify_vw(config, warning);
    }
    bool passed = std::all_of(outcome.reports.begin(), outcome.reports.end(), [](const Report& r) { return r.passed(); });
    CommandResult result{passed ? kExitOk : kExitViolations, "", warning};
    if (config.format == Format::json) {
      Json j;
      j["schema_version"] = kReportSchemaVersion;
      j["command"] = "verify";
      j["model"] = model.id;
      j["algebra"] = outcome.algebra;
      j["carrier"] = outcome.carrier;
      j["plain_nambu"] = config.plain_nambu;
      j["passed"] = passed;
      j["reports"] = Json::array();
      for (const auto& r : outcome.reports) j["reports"].push_back(r.to_json());
      result.out = dump(j);
    } else {
      std::string out = "verify " + model.id + ": algebra " + outcome.algebra + " on " + outcome.carrier +
                        (config.plain_nambu ? " (untwisted identity)" : "") + "\n";
      for (const auto& r : outcome.reports) out += r.to_text();
      out += passed ? "PASS\n" : "FAIL\n";
      result.out = out;
    }
    return result;
  });
}

CommandResult cmd_counterexample(std::string_view name, const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    if (config.z || config.theta || config.gamma || config.q || config.range || config.degree || config.order ||
        config.save || config.plain_nambu || config.allow_any_z) {
      throw UsageError("counterexample takes only --format (and --k4 for jacobian-k4)");
    }
    if (name == "cross4-theta") {
      if (config.k4) throw UsageError("--k4 applies to jacobian-k4 only");
      return counterexample_cross4(config);
    }
    if (name == "jacobian-k4") return counterexample_jacobian(config);
    throw UsageError("unknown counterexample '" + std::string(name) + "' (cross4-theta | jacobian-k4)");
  });
}

CommandResult cmd_deform(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    validate(config, "deform");
    const ModelInfo& model = find_model(config.model);
    if (model.id == "cross4") {
      auto family = build_cross_deformation(config.order.value_or(6));
      return deform_result(family, cross4_default_tuples(), cross4_default_triples(), cross4_basis(), config, "");
    }
    if (model.id == "jacobian3") {
      int degree = config.degree.value_or(3);
      auto family = build_jacobian_deformation(JacobianShape{}, {Scalar(1), Scalar(1), Scalar(1)},
                                               config.order.value_or(4));
      return deform_result(family, jacobian_default_tuples(degree), jacobian_default_triples(degree),
                           monomials_up_to(degree), config, "");
    }
    Scalar z = parse_scalar(config.z.value_or("2i"), "--z");
    auto [lo, hi] = parse_range(config.range.value_or("-2..2"));
    auto family = [&] {
      try {
        return build_qvw_deformation(config.order.value_or(4), z, config.allow_any_z);
      } catch (const InvalidArgument& e) {
        throw UsageError(std::string(e.what()) + "; pass --allow-any-z to override");
      }
    }();
    return deform_result(family, vw_default_tuples(lo, hi), vw_default_triples(lo, hi), vw_generators(lo, hi), config,
                         tuple_warning(lo, hi));
  });
}

CommandResult cmd_list_models(Format format) {
  CommandResult result;
  if (format == Format::json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "list-models";
    j["models"] = Json::array();
    for (const auto& m : model_registry()) {
      auto params = [](const std::vector<ParamSpec>& list) {
        Json a = Json::array();
        for (const auto& p : list) a.push_back({{"flag", p.flag}, {"values", p.values}, {"default", p.fallback}});
        return a;
      };
      j["models"].push_back({{"id", m.id},
                             {"aliases", m.aliases},
                             {"carrier", m.carrier},
                             {"description", m.description},
                             {"deformation", m.deformation},
                             {"verify", params(m.verify_params)},
                             {"deform", params(m.deform_params)}});
    }
    result.out = dump(j);
    return result;
  }
  std::ostringstream out;
  for (const auto& m : model_registry()) {
    out << m.id;
    for (const auto& a : m.aliases) out << " (" << a << ")";
    out << ": " << m.description << ", carrier " << m.carrier << "\n";
    out << "  deformation: " << m.deformation << "\n";
    for (const auto& [label, list] : {std::pair{"verify", &m.verify_params}, std::pair{"deform", &m.deform_params}}) {
      for (const auto& p : *list) {
        out << "  " << label << " " << p.flag << " " << p.values << " [default " << p.fallback << "]\n";
      }
    }
  }
  result.out = out.str();
  return result;
}

}  // namespace hnambu::cli
