#include "hnambu/report.hpp"

namespace hnambu {

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["check"] = check;
  j["algebra"] = algebra_id;
  j["sample_size"] = sample_size;
  j["passed"] = passed();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    j["violations"].push_back({{"witness", v.witness}, {"residual", v.residual}});
  }
  return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.check = j.at("check").get<std::string>();
  r.algebra_id = j.at("algebra").get<std::string>();
  r.sample_size = j.at("sample_size").get<std::size_t>();
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("witness").get<std::string>(), v.at("residual").get<std::string>()});
  }
  return r;
}

std::string Report::to_text(std::size_t max_listed) const {
  std::string out = check + " [" + algebra_id + "]: " + (passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(sample_size) + " checked, " + std::to_string(violations.size()) +
                    " violations)\n";
  for (std::size_t k = 0; k < violations.size() && k < max_listed; ++k) {
    out += "  witness " + violations[k].witness + "\n    residual " + violations[k].residual + "\n";
  }
  if (violations.size() > max_listed) {
    out += "  ... " + std::to_string(violations.size() - max_listed) + " more\n";
  }
  return out;
}

Report merge_reports(std::string check, std::string algebra_id, const std::vector<Report>& parts) {
  Report out{std::move(check), std::move(algebra_id), 0, {}};
  for (const auto& p : parts) {
    out.sample_size += p.sample_size;
    out.violations.insert(out.violations.end(), p.violations.begin(), p.violations.end());
  }
  return out;
}

}  // namespace hnambu
