#include <CLI11.hpp>

#include <iostream>

#include "hnambu/cli.hpp"

namespace {

using hnambu::cli::CommandResult;
using hnambu::cli::RunConfig;

template <class T>
void optional_flag(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

void model_flags(CLI::App* app, RunConfig& config) {
  optional_flag(app, "--z", config.z, "Virasoro-Witt constant z (Gaussian rational, e.g. 2i)");
  optional_flag(app, "--theta", config.theta, "rotation angles: exact:c1,s1,c2,s2 | series:N | symbolic");
  optional_flag(app, "--gamma", config.gamma, "substitution k1,k2,k3,k4,p1,p2");
  optional_flag(app, "--q", config.q, "scaling q: <scalar> | series:N | laurent");
  optional_flag(app, "--range", config.range, "generator index range a..b");
  optional_flag(app, "--degree", config.degree, "monomial degree bound of the sample");
  optional_flag(app, "--order", config.order, "truncation order N");
  app->add_flag("--plain-nambu", config.plain_nambu, "check the untwisted Nambu identity");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of ternary hom-Nambu-Lie algebras and their deformations"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  std::string counterexample;
  app.add_option("--format", format, "output format: text | json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check skew-symmetry, the hom-Nambu identity and multiplicativity");
  verify->add_option("model", config.model, "model id (see list-models)")->required();
  model_flags(verify, config);
  verify->add_option("--format", format, "output format: text | json");

  auto* cex = app.add_subcommand("counterexample", "reproduce a counterexample: cross4-theta | jacobian-k4");
  cex->add_option("name", counterexample, "cross4-theta | jacobian-k4")->required();
  optional_flag(cex, "--k4", config.k4, "bind k4 to a value (jacobian-k4)");
  cex->add_option("--format", format, "output format: text | json");

  auto* deform = app.add_subcommand("deform", "verify a formal deformation order by order");
  deform->add_option("model", config.model, "cross4 | jacobian3 | vw (qvw)")->required();
  model_flags(deform, config);
  deform->add_flag("--allow-any-z", config.allow_any_z, "accept z outside {2i, -2i}");
  optional_flag(deform, "--save", config.save, "write the tabulated family to a file");
  deform->add_option("--format", format, "output format: text | json");

  auto* list = app.add_subcommand("list-models", "list the models and their parameters");
  list->add_option("--format", format, "output format: text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hnambu::cli::kExitUsage;
  }

  CommandResult result;
  try {
    config.format = hnambu::cli::parse_format(format);
  } catch (const hnambu::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hnambu::cli::kExitUsage;
  }
  if (*verify) {
    result = hnambu::cli::cmd_verify(config);
  } else if (*cex) {
    result = hnambu::cli::cmd_counterexample(counterexample, config);
  } else if (*deform) {
    result = hnambu::cli::cmd_deform(config);
  } else {
    result = hnambu::cli::cmd_list_models(config.format);
  }
  std::cerr << result.err;
  std::cout << result.out;
  return result.exit_code;
}
