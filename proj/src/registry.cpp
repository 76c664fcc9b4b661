#include <algorithm>
#include <charconv>

#include "hnambu/cli.hpp"

namespace hnambu::cli {

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json" || text == "json-like") return Format::json;
  throw UsageError("unknown format '" + std::string(text) + "' (text | json)");
}

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> models{
      {"cross4",
       {},
       "R4",
       "cross-product in R4, [x, y, z] = det(x y z e)",
       "two-parameter rotation family (t1, t2) = (theta1, theta2)",
       {{"--theta", "exact:c1,s1,c2,s2 | series:N | symbolic", "untwisted"},
        {"--plain-nambu", "flag", "off"}},
       {{"--order", "N >= 0", "6"}}},
      {"jacobian3",
       {"jacobian"},
       "K[x1,x2,x3]",
       "three-dimensional Jacobian determinant on monomials",
       "k4 and the coefficients of p1 = a*x2 + b*x3, p2 = c*x3",
       {{"--gamma", "k1,k2,k3,k4,p1,p2 with k1*k2*k3 = 1", "untwisted"},
        {"--degree", "monomial degree bound d >= 1", "3"},
        {"--plain-nambu", "flag", "off"}},
       {{"--order", "N >= 0", "4"}, {"--degree", "monomial degree bound d >= 1", "3"}}},
      {"vw",
       {"qvw"},
       "W",
       "ternary Virasoro-Witt algebra on Q_n, R_n",
       "one-parameter family q = 1 + t",
       {{"--z", "Gaussian rational", "2i"},
        {"--q", "nonzero scalar | series:N | laurent", "untwisted"},
        {"--range", "a..b", "-2..2"},
        {"--plain-nambu", "flag", "off"}},
       {{"--order", "N >= 0", "4"},
        {"--z", "2i | -2i", "2i"},
        {"--range", "a..b", "-2..2"},
        {"--allow-any-z", "flag", "off"}}},
  };
  return models;
}

const ModelInfo& find_model(std::string_view id) {
  for (const auto& m : model_registry()) {
    if (m.id == id || std::find(m.aliases.begin(), m.aliases.end(), id) != m.aliases.end()) return m;
  }
  throw UsageError("unknown model '" + std::string(id) + "' (see list-models)");
}

void validate(const RunConfig& config, std::string_view command) {
  const ModelInfo& model = find_model(config.model);
  const auto& params = command == "deform" ? model.deform_params : model.verify_params;
  auto allowed = [&](std::string_view flag) {
    return std::any_of(params.begin(), params.end(), [&](const ParamSpec& p) { return p.flag == flag; });
  };
  auto require = [&](bool present, std::string_view flag) {
    if (present && !allowed(flag)) {
      throw UsageError(std::string(flag) + " does not apply to " + std::string(command) + " " + model.id);
    }
  };
  require(config.z.has_value(), "--z");
  require(config.theta.has_value(), "--theta");
  require(config.gamma.has_value(), "--gamma");
  require(config.q.has_value(), "--q");
  require(config.range.has_value(), "--range");
  require(config.degree.has_value(), "--degree");
  require(config.order.has_value(), "--order");
  require(config.plain_nambu, "--plain-nambu");
  require(config.allow_any_z, "--allow-any-z");
  if (config.k4) throw UsageError("--k4 applies to counterexample jacobian-k4 only");
  if (config.save && command != "deform") throw UsageError("--save applies to deform only");
  if (config.order && *config.order < 0) throw UsageError("--order must be >= 0");
  if (config.degree && *config.degree < 1) throw UsageError("--degree must be >= 1");
  if (config.range) parse_range(*config.range);
}

std::pair<int, int> parse_range(std::string_view text) {
  auto dots = text.find("..");
  auto read = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw UsageError("bad range '" + std::string(text) + "' (expected a..b)");
    }
    return value;
  };
  if (dots == std::string_view::npos) throw UsageError("bad range '" + std::string(text) + "' (expected a..b)");
  int lo = read(text.substr(0, dots));
  int hi = read(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

}  // namespace hnambu::cli
