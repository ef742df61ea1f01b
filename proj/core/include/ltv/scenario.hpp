#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltv/commute.hpp"
#include "ltv/robustness.hpp"

namespace ltv {

enum class Action { Simulate, Cascade, CheckCommute, Synthesize, FeedbackPair, ZeroOrder,
                    Robustness };

std::string to_string(Action action);
Action action_from_string(const std::string& name);

/// One system in a scenario: coefficient expressions indexed by i (the
/// weight of y(k+i)) and the initial state y(0..n-1).
struct SystemSpec {
  int order = 1;
  std::vector<std::string> coefficients;
  std::vector<double> initial_state;

  LtvSystem build(const std::string& label) const;
};

/// Input or disturbance: a closed-form expression in k, an inline sample
/// list, a unit sample, or a pulse train.
struct SignalSpec {
  enum class Kind { Expression, Samples, UnitSample, PulseTrain };
  Kind kind = Kind::Expression;
  std::string expression;
  std::vector<double> samples;
  long sample_at = 0;
  double amplitude = 0.0;
  long period = 1;
  double duty = 0.5;

  /// Parse the string forms: "unit_sample(l)", "pulse_train(a,p,d)", or a
  /// coefficient expression.
  static SignalSpec from_text(const std::string& text);

  Signal materialize(long K) const;
  std::string describe() const;
};

/// Convention for extracting a modulation index from a composited output:
/// per-carrier-period peaks over complete windows inside [begin, end].
struct EnvelopeSpec {
  long begin = 0;
  long end = 0;
  long period = 1;
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::string description;
  Action action = Action::Simulate;
  long horizon = 0;
  std::map<std::string, SystemSpec> systems;
  SignalSpec input;
  std::optional<SignalSpec> disturbance;
  /// Expression added to outputs for plotting; emitted as extra CSVs.
  std::optional<std::string> display_overlay;
  std::optional<EnvelopeSpec> envelope;
  std::optional<double> tolerance;  // relative; absolute floor stays 1e-12
  std::uint64_t seed = 1;

  // action parameters
  std::string first = "A";
  std::string second = "B";
  std::optional<double> c0, c1;      // synthesize
  std::optional<double> alpha, beta; // feedback-pair
  CascadeOrder order = CascadeOrder::AB;
  bool with_initial_conditions = true;

  Tolerance tol() const;
  const SystemSpec& system(const std::string& label) const;
};

/// Parse and validate a JSON config. All expressions are parsed eagerly so
/// syntax errors surface at load time with their position.
ScenarioConfig parse_config(const std::string& json_text, const std::string& name_hint);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Scenarios shipped with the tool (the worked examples from the README).
const std::vector<ScenarioConfig>& builtin_scenarios();
const ScenarioConfig* find_builtin(const std::string& name);

struct RunReport {
  std::string scenario;
  std::string action;
  /// report.txt lines, in emission order ("key", "value").
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::filesystem::path> outputs;
  double wall_seconds = 0.0;
  /// 0 = success, 1 = a check action's verdict is false.
  int exit_code = 0;

  std::string value(const std::string& key) const;  // "" when absent
};

/// Execute the scenario: one CSV per produced signal, named
/// "<scenario>_<signal>.csv", plus report.txt, all in out_dir.
RunReport run(const ScenarioConfig& config, const std::filesystem::path& out_dir);

}  // namespace ltv
