#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace hnambu {

inline constexpr int kReportSchemaVersion = 1;

struct Violation {
  std::string witness;
  std::string residual;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of one identity check over a finite sample. Violations are data:
/// an empty list means the identity held on every sampled input.
struct Report {
  std::string check;
  std::string algebra_id;
  std::size_t sample_size = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
  /// One summary line, followed by up to `max_listed` violation lines.
  std::string to_text(std::size_t max_listed = 10) const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Concatenates the violations of `parts` under a new check name.
Report merge_reports(std::string check, std::string algebra_id, const std::vector<Report>& parts);

}  // namespace hnambu
