#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sric/coeffs.hpp"
#include "sric/integrate.hpp"
#include "sric/superfield.hpp"

namespace sric::cli {

using nlohmann::json;

/// Thrown when the config file cannot be read into a RunConfig at all
/// (missing file, malformed JSON, wrong types). Maps to exit code 3.
class ConfigReadError : public Error {
public:
  using Error::Error;
};

enum class Mode {
  SolveSuper,
  SolveComponents,
  Compare,
  Linearize,
  Delinearize,
  Bernoulli,
  B0,
  DeriveSystem,
  Residual,
};

Mode mode_from_string(const std::string& name);
std::string mode_to_string(Mode mode);

struct RunConfig {
  Mode mode = Mode::SolveComponents;
  CoefficientTriple coeffs{parse_expr("0"), parse_expr("0"), parse_expr("0")};
  // source strings after preset expansion, echoed into reports
  std::string a_src, b_src, c_src;
  SuperfieldComponents initial;
  SuperfieldComponents second;
  bool has_second = false;
  double t0 = 0.0;
  double t1 = 1.0;
  StepperConfig stepper;
  double tolerance = 0.0;  // 0 means mode default
  std::string trajectory_path;  // residual mode input
  std::string output = "run";

  /// Mode-appropriate verdict tolerance.
  double effective_tolerance() const;

  /// The fully-expanded config as JSON (presets resolved, defaults
  /// materialized); echoed into every report.
  json echo() const;
};

/// Load and structurally validate a config file. Throws ConfigReadError for
/// unreadable input and ValidationError for semantic problems (unknown mode
/// or preset, bad expressions, missing mode-specific fields).
RunConfig load_config(const std::string& path, const std::optional<std::string>& mode_override,
                      const std::optional<std::string>& output_override);

/// Same, from an already-parsed JSON value (used by tests).
RunConfig config_from_json(const json& j);

}  // namespace sric::cli
