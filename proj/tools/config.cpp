#include "config.hpp"

#include <fstream>

namespace sric::cli {

namespace {

const std::map<std::string, Mode>& mode_table() {
  static const std::map<std::string, Mode> table = {
      {"solve-super", Mode::SolveSuper},   {"solve-components", Mode::SolveComponents},
      {"compare", Mode::Compare},          {"linearize", Mode::Linearize},
      {"delinearize", Mode::Delinearize},  {"bernoulli", Mode::Bernoulli},
      {"b0", Mode::B0},                    {"derive-system", Mode::DeriveSystem},
      {"residual", Mode::Residual},
  };
  return table;
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    throw ConfigReadError(std::string("field '") + key + "' must be a number");
  }
  return j[key].get<double>();
}

SuperfieldComponents components_from(const json& j, const char* key) {
  const json& c = j[key];
  if (!c.is_object()) {
    throw ConfigReadError(std::string("field '") + key + "' must be an object");
  }
  for (const auto& [k, v] : c.items()) {
    if (k != "y" && k != "re_l" && k != "im_l" && k != "g0" && k != "g1") {
      throw ConfigReadError("unknown component field '" + k + "' in '" + key + "'");
    }
  }
  SuperfieldComponents out;
  out.y = number_or(c, "y", 0.0);
  out.l = Complex(number_or(c, "re_l", 0.0), number_or(c, "im_l", 0.0));
  out.g0 = number_or(c, "g0", 0.0);
  out.g1 = number_or(c, "g1", 0.0);
  return out;
}

json components_to_json(const SuperfieldComponents& c) {
  return json{{"y", c.y}, {"re_l", c.l.real()}, {"im_l", c.l.imag()}, {"g0", c.g0},
              {"g1", c.g1}};
}

void parse_coeffs(RunConfig& cfg, const json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw ConfigReadError("config needs a 'coeffs' object");
  }
  const json& c = j["coeffs"];
  if (c.contains("preset")) {
    const std::string name = c["preset"].get<std::string>();
    cfg.coeffs = preset_coeffs(name);
    cfg.a_src = cfg.coeffs.a.to_string();
    cfg.b_src = cfg.coeffs.b.to_string();
    cfg.c_src = cfg.coeffs.c.to_string();
    return;
  }
  for (const char* key : {"a", "b", "c"}) {
    if (!c.contains(key) || !c[key].is_string()) {
      throw ConfigReadError("'coeffs' needs string fields a, b, c (or a preset)");
    }
  }
  cfg.a_src = c["a"].get<std::string>();
  cfg.b_src = c["b"].get<std::string>();
  cfg.c_src = c["c"].get<std::string>();
  cfg.coeffs = CoefficientTriple{parse_expr(cfg.a_src), parse_expr(cfg.b_src),
                                 parse_expr(cfg.c_src)};
}

void parse_stepper(RunConfig& cfg, const json& j) {
  if (!j.contains("stepper")) return;
  const json& s = j["stepper"];
  if (!s.is_object()) throw ConfigReadError("'stepper' must be an object");
  if (s.contains("method")) {
    const std::string m = s["method"].get<std::string>();
    if (m == "rk4-fixed") {
      cfg.stepper.method = StepMethod::Rk4Fixed;
    } else if (m == "rkf45-adaptive") {
      cfg.stepper.method = StepMethod::Rkf45Adaptive;
    } else {
      throw ValidationError("unknown stepper method '" + m + "'");
    }
  }
  cfg.stepper.h = number_or(s, "h", cfg.stepper.h);
  cfg.stepper.h0 = number_or(s, "h0", cfg.stepper.h0);
  cfg.stepper.atol = number_or(s, "atol", cfg.stepper.atol);
  cfg.stepper.rtol = number_or(s, "rtol", cfg.stepper.rtol);
  cfg.stepper.hmin = number_or(s, "hmin", cfg.stepper.hmin);
  cfg.stepper.hmax = number_or(s, "hmax", cfg.stepper.hmax);
  if (s.contains("record_every")) {
    cfg.stepper.record_every = s["record_every"].get<int>();
  }
}

}  // namespace

Mode mode_from_string(const std::string& name) {
  auto it = mode_table().find(name);
  if (it == mode_table().end()) {
    throw ValidationError("unknown mode '" + name + "'");
  }
  return it->second;
}

std::string mode_to_string(Mode mode) {
  for (const auto& [name, m] : mode_table()) {
    if (m == mode) return name;
  }
  return "?";
}

double RunConfig::effective_tolerance() const {
  if (tolerance > 0.0) return tolerance;
  return mode == Mode::Compare ? 1e-8 : 1e-6;
}

json RunConfig::echo() const {
  json j;
  j["mode"] = mode_to_string(mode);
  j["coeffs"] = {{"a", a_src}, {"b", b_src}, {"c", c_src}};
  if (mode != Mode::DeriveSystem && mode != Mode::Residual) {
    j["initial"] = components_to_json(initial);
    if (has_second) j["second"] = components_to_json(second);
    j["interval"] = {t0, t1};
    json s;
    s["method"] = stepper.method_name();
    if (stepper.method == StepMethod::Rk4Fixed) {
      s["h"] = stepper.h;
    } else {
      s["h0"] = stepper.h0;
      s["atol"] = stepper.atol;
      s["rtol"] = stepper.rtol;
      s["hmin"] = stepper.hmin;
      s["hmax"] = stepper.hmax;
    }
    s["record_every"] = stepper.record_every;
    j["stepper"] = s;
  }
  if (mode == Mode::Residual) j["trajectory"] = trajectory_path;
  j["tolerance"] = effective_tolerance();
  j["output"] = output;
  return j;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigReadError("config root must be a JSON object");
  RunConfig cfg;

  if (!j.contains("mode") || !j["mode"].is_string()) {
    throw ConfigReadError("config needs a string 'mode'");
  }
  cfg.mode = mode_from_string(j["mode"].get<std::string>());

  if (cfg.mode != Mode::DeriveSystem) {
    parse_coeffs(cfg, j);
  } else {
    cfg.a_src = "a";
    cfg.b_src = "b";
    cfg.c_src = "c";
  }

  if (j.contains("interval")) {
    const json& iv = j["interval"];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number()) {
      throw ConfigReadError("'interval' must be [t0, t1]");
    }
    cfg.t0 = iv[0].get<double>();
    cfg.t1 = iv[1].get<double>();
  }

  if (j.contains("initial")) cfg.initial = components_from(j, "initial");
  if (j.contains("second")) {
    cfg.second = components_from(j, "second");
    cfg.has_second = true;
  }
  parse_stepper(cfg, j);
  cfg.tolerance = number_or(j, "tolerance", 0.0);
  if (j.contains("trajectory")) cfg.trajectory_path = j["trajectory"].get<std::string>();
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();

  // Mode-specific required fields.
  const bool needs_interval =
      cfg.mode != Mode::DeriveSystem && cfg.mode != Mode::Residual;
  if (needs_interval) {
    if (!j.contains("interval")) throw ValidationError("mode requires an 'interval'");
    if (!(cfg.t1 > cfg.t0)) throw ValidationError("interval needs t1 > t0");
    cfg.stepper.validate();
  }
  if ((cfg.mode == Mode::Bernoulli || cfg.mode == Mode::B0 || cfg.mode == Mode::Delinearize) &&
      !cfg.has_second) {
    throw ValidationError("mode '" + mode_to_string(cfg.mode) +
                          "' requires a 'second' superfield");
  }
  if (cfg.mode == Mode::Residual && cfg.trajectory_path.empty()) {
    throw ValidationError("mode 'residual' requires a 'trajectory' CSV path");
  }
  return cfg;
}

RunConfig load_config(const std::string& path, const std::optional<std::string>& mode_override,
                      const std::optional<std::string>& output_override) {
  std::ifstream f(path);
  if (!f) throw ConfigReadError("cannot open config file '" + path + "'");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw ConfigReadError(std::string("malformed config JSON: ") + e.what());
  }
  if (mode_override) j["mode"] = *mode_override;
  if (output_override) j["output"] = *output_override;
  return config_from_json(j);
}

}  // namespace sric::cli
