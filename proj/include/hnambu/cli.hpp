#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnambu/errors.hpp"

namespace hnambu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Bad model id, flag or flag value.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { text, json };

Format parse_format(std::string_view text);

/// One command invocation. Unset options take the model defaults.
struct RunConfig {
  std::string model;
  std::optional<std::string> z;
  std::optional<std::string> theta;  // exact:c1,s1,c2,s2 | series:N | symbolic
  std::optional<std::string> gamma;  // k1,k2,k3,k4,p1,p2
  std::optional<std::string> q;      // <scalar> | series:N | laurent
  std::optional<std::string> range;  // a..b
  std::optional<int> degree;
  std::optional<int> order;
  std::optional<std::string> k4;
  std::optional<std::string> save;
  bool plain_nambu = false;
  bool allow_any_z = false;
  Format format = Format::text;
};

struct ParamSpec {
  std::string flag;
  std::string values;
  std::string fallback;
};

struct ModelInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string carrier;
  std::string description;
  std::string deformation;
  std::vector<ParamSpec> verify_params;
  std::vector<ParamSpec> deform_params;
};

const std::vector<ModelInfo>& model_registry();
/// Looks up an id or alias; throws UsageError.
const ModelInfo& find_model(std::string_view id);
/// Rejects flags the model does not take for `command` ("verify" or "deform").
void validate(const RunConfig& config, std::string_view command);

/// "a..b" with a <= b.
std::pair<int, int> parse_range(std::string_view text);

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_counterexample(std::string_view name, const RunConfig& config);
CommandResult cmd_deform(const RunConfig& config);
CommandResult cmd_list_models(Format format);

inline constexpr std::string_view kCounterexamples[] = {"cross4-theta", "jacobian-k4"};

}  // namespace hnambu::cli
