#include "ltv/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ltv {

using nlohmann::json;

std::string to_string(Action action) {
  switch (action) {
    case Action::Simulate: return "simulate";
    case Action::Cascade: return "cascade";
    case Action::CheckCommute: return "check-commute";
    case Action::Synthesize: return "synthesize";
    case Action::FeedbackPair: return "feedback-pair";
    case Action::ZeroOrder: return "zero-order";
    case Action::Robustness: return "robustness";
  }
  return "?";
}

Action action_from_string(const std::string& name) {
  if (name == "simulate") return Action::Simulate;
  if (name == "cascade") return Action::Cascade;
  if (name == "check-commute") return Action::CheckCommute;
  if (name == "synthesize") return Action::Synthesize;
  if (name == "feedback-pair") return Action::FeedbackPair;
  if (name == "zero-order") return Action::ZeroOrder;
  if (name == "robustness") return Action::Robustness;
  throw InvalidArgument("unknown action '" + name + "'");
}

LtvSystem SystemSpec::build(const std::string& label) const {
  if (order < 0) throw SchemaError("system '" + label + "': order must be nonnegative", label);
  if (coefficients.size() != static_cast<std::size_t>(order) + 1) {
    throw SchemaError("system '" + label + "': order " + std::to_string(order) + " needs " +
                          std::to_string(order + 1) + " coefficient expressions, got " +
                          std::to_string(coefficients.size()),
                      "systems." + label + ".coefficients");
  }
  std::vector<CoefficientSequence> coeffs;
  coeffs.reserve(coefficients.size());
  for (const std::string& text : coefficients) {
    coeffs.push_back(CoefficientSequence::closed_form(text));
  }
  std::vector<double> state = initial_state;
  if (state.empty()) state.assign(static_cast<std::size_t>(order), 0.0);
  if (state.size() != static_cast<std::size_t>(order)) {
    throw SchemaError("system '" + label + "': initial_state needs " + std::to_string(order) +
                          " values, got " + std::to_string(state.size()),
                      "systems." + label + ".initial_state");
  }
  return LtvSystem(std::move(coeffs), std::move(state), label);
}

namespace {

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

}  // namespace

SignalSpec SignalSpec::from_text(const std::string& text) {
  const std::string t = trimmed(text);
  SignalSpec spec;
  if (t.rfind("unit_sample", 0) == 0) {
    long l = 0;
    int consumed = -1;
    if (std::sscanf(t.c_str(), "unit_sample ( %ld ) %n", &l, &consumed) >= 1 &&
        consumed == static_cast<int>(t.size())) {
      spec.kind = Kind::UnitSample;
      spec.sample_at = l;
      return spec;
    }
    throw SchemaError("malformed unit_sample form '" + t + "', expected unit_sample(<l>)",
                      "input");
  }
  if (t.rfind("pulse_train", 0) == 0) {
    double a = 0.0, duty = 0.0;
    long period = 0;
    int consumed = -1;
    if (std::sscanf(t.c_str(), "pulse_train ( %lf , %ld , %lf ) %n", &a, &period, &duty,
                    &consumed) >= 3 &&
        consumed == static_cast<int>(t.size())) {
      spec.kind = Kind::PulseTrain;
      spec.amplitude = a;
      spec.period = period;
      spec.duty = duty;
      return spec;
    }
    throw SchemaError(
        "malformed pulse_train form '" + t + "', expected pulse_train(<amp>,<period>,<duty>)",
        "input");
  }
  spec.kind = Kind::Expression;
  spec.expression = t;
  Expr::parse(t);  // surface syntax errors at load time
  return spec;
}

Signal SignalSpec::materialize(long K) const {
  switch (kind) {
    case Kind::Expression:
      return Signal::from_expression(Expr::parse(expression), K);
    case Kind::Samples: {
      if (samples.size() < static_cast<std::size_t>(K) + 1) {
        throw SchemaError("inline signal has " + std::to_string(samples.size()) +
                              " samples but the horizon needs " + std::to_string(K + 1),
                          "input");
      }
      return Signal(std::vector<double>(samples.begin(), samples.begin() + K + 1));
    }
    case Kind::UnitSample:
      return Signal::unit_sample(sample_at, K);
    case Kind::PulseTrain:
      return pulse_train(amplitude, period, duty, K);
  }
  throw Error("corrupt signal spec");
}

std::string SignalSpec::describe() const {
  switch (kind) {
    case Kind::Expression: return expression;
    case Kind::Samples: return "inline[" + std::to_string(samples.size()) + "]";
    case Kind::UnitSample: return "unit_sample(" + std::to_string(sample_at) + ")";
    case Kind::PulseTrain:
      return "pulse_train(" + fmt_double(amplitude) + "," + std::to_string(period) + "," +
             fmt_double(duty) + ")";
  }
  return "?";
}

Tolerance ScenarioConfig::tol() const {
  Tolerance t;
  if (tolerance) t.relative = *tolerance;
  return t;
}

const SystemSpec& ScenarioConfig::system(const std::string& label) const {
  const auto it = systems.find(label);
  if (it == systems.end()) {
    throw SchemaError("scenario references unknown system '" + label + "'", "systems." + label);
  }
  return it->second;
}

namespace {

long get_long(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw SchemaError("'" + key + "' must be an integer", key);
  }
  return v.get<long>();
}

double get_double(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw SchemaError("'" + key + "' must be a number", key);
  return v.get<double>();
}

std::string get_string(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_string()) throw SchemaError("'" + key + "' must be a string", key);
  return v.get<std::string>();
}

SignalSpec parse_signal(const json& v, const std::string& key) {
  if (v.is_string()) return SignalSpec::from_text(v.get<std::string>());
  if (v.is_array()) {
    SignalSpec spec;
    spec.kind = SignalSpec::Kind::Samples;
    for (const auto& e : v) {
      if (!e.is_number()) throw SchemaError("'" + key + "' samples must be numbers", key);
      spec.samples.push_back(e.get<double>());
    }
    if (spec.samples.empty()) throw SchemaError("'" + key + "' sample list is empty", key);
    return spec;
  }
  throw SchemaError("'" + key + "' must be an expression string or a sample array", key);
}

const char* const kKnownKeys[] = {"name",    "description", "action",       "horizon",
                                  "systems", "input",       "disturbance",  "display_overlay",
                                  "envelope", "tolerance",  "seed",         "first",
                                  "second",  "c0",          "c1",           "alpha",
                                  "beta",    "order",       "with_ics"};

}  // namespace

ScenarioConfig parse_config(const std::string& json_text, const std::string& name_hint) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("config is not valid JSON: ") + e.what(), "<json>");
  }
  if (!j.is_object()) throw SchemaError("config root must be a JSON object", "<root>");

  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || item.key() == k;
    if (!known) throw SchemaError("unknown config key '" + item.key() + "'", item.key());
  }

  ScenarioConfig c;
  c.name = j.contains("name") ? get_string(j, "name") : name_hint;
  if (c.name.empty()) c.name = "scenario";
  if (j.contains("description")) c.description = get_string(j, "description");

  if (!j.contains("horizon")) throw SchemaError("missing required key 'horizon'", "horizon");
  c.horizon = get_long(j, "horizon");
  if (c.horizon < 0) throw SchemaError("'horizon' must be nonnegative", "horizon");

  if (!j.contains("action")) throw SchemaError("missing required key 'action'", "action");
  try {
    c.action = action_from_string(get_string(j, "action"));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what(), "action");
  }

  if (j.contains("systems")) {
    const auto& js = j.at("systems");
    if (!js.is_object()) throw SchemaError("'systems' must be an object", "systems");
    for (const auto& item : js.items()) {
      const json& sj = item.value();
      SystemSpec spec;
      if (!sj.contains("order")) {
        throw SchemaError("system '" + item.key() + "' is missing 'order'",
                          "systems." + item.key() + ".order");
      }
      spec.order = static_cast<int>(get_long(sj, "order"));
      if (!sj.contains("coefficients") || !sj.at("coefficients").is_array()) {
        throw SchemaError("system '" + item.key() + "' needs a 'coefficients' array",
                          "systems." + item.key() + ".coefficients");
      }
      for (const auto& e : sj.at("coefficients")) {
        if (!e.is_string()) {
          throw SchemaError("coefficients must be expression strings",
                            "systems." + item.key() + ".coefficients");
        }
        spec.coefficients.push_back(e.get<std::string>());
      }
      if (sj.contains("initial_state")) {
        for (const auto& e : sj.at("initial_state")) {
          if (!e.is_number()) {
            throw SchemaError("initial_state must hold numbers",
                              "systems." + item.key() + ".initial_state");
          }
          spec.initial_state.push_back(e.get<double>());
        }
      }
      spec.build(item.key());  // parse expressions and check counts now
      c.systems.emplace(item.key(), std::move(spec));
    }
  }

  if (j.contains("input")) c.input = parse_signal(j.at("input"), "input");
  else c.input = SignalSpec::from_text("0");
  if (j.contains("disturbance")) c.disturbance = parse_signal(j.at("disturbance"), "disturbance");
  if (j.contains("display_overlay")) {
    c.display_overlay = get_string(j, "display_overlay");
    Expr::parse(*c.display_overlay);
  }
  if (j.contains("envelope")) {
    const auto& je = j.at("envelope");
    EnvelopeSpec env;
    env.begin = get_long(je, "begin");
    env.end = get_long(je, "end");
    env.period = get_long(je, "period");
    if (env.begin < 0 || env.end < env.begin || env.period < 1) {
      throw SchemaError("envelope needs 0 <= begin <= end and a positive period", "envelope");
    }
    c.envelope = env;
  }
  if (j.contains("tolerance")) c.tolerance = get_double(j, "tolerance");
  if (j.contains("seed")) c.seed = static_cast<std::uint64_t>(get_long(j, "seed"));
  if (j.contains("first")) c.first = get_string(j, "first");
  if (j.contains("second")) c.second = get_string(j, "second");
  if (j.contains("c0")) c.c0 = get_double(j, "c0");
  if (j.contains("c1")) c.c1 = get_double(j, "c1");
  if (j.contains("alpha")) c.alpha = get_double(j, "alpha");
  if (j.contains("beta")) c.beta = get_double(j, "beta");
  if (j.contains("order")) {
    const std::string o = get_string(j, "order");
    if (o == "AB") c.order = CascadeOrder::AB;
    else if (o == "BA") c.order = CascadeOrder::BA;
    else throw SchemaError("'order' must be \"AB\" or \"BA\"", "order");
  }
  if (j.contains("with_ics")) {
    if (!j.at("with_ics").is_boolean()) throw SchemaError("'with_ics' must be a boolean", "with_ics");
    c.with_initial_conditions = j.at("with_ics").get<bool>();
  }

  // referenced systems must exist for the configured action
  c.system(c.first);
  const bool needs_second = c.action == Action::Cascade || c.action == Action::CheckCommute ||
                            c.action == Action::ZeroOrder || c.action == Action::Robustness;
  if (needs_second) c.system(c.second);

  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.stem().string());
}

// --- built-in scenarios -----------------------------------------------------

namespace {

const char* const kBuiltinTexts[] = {
    R"json({
  "name": "example1",
  "description": "commutative filter pair with matching nonzero initial conditions; both cascade orders agree",
  "action": "check-commute",
  "horizon": 50,
  "with_ics": true,
  "systems": {
    "A": {"order": 1, "coefficients": ["(k+1)^2", "exp(k)"], "initial_state": [2]},
    "B": {"order": 1, "coefficients": ["2*k^2 + 4*k + 1", "2*exp(k)"], "initial_state": [2]}
  },
  "input": "unit_sample(0)"
})json",
    R"json({
  "name": "example1-noncommutative",
  "description": "same pair with a detuned constant term: the initial-condition constraint fails and the orders diverge",
  "action": "check-commute",
  "horizon": 50,
  "with_ics": true,
  "systems": {
    "A": {"order": 1, "coefficients": ["(k+1)^2", "exp(k)"], "initial_state": [2]},
    "B": {"order": 1, "coefficients": ["2*k^2 + 4*k + 3", "2*exp(k)"], "initial_state": [2]}
  },
  "input": "unit_sample(0)"
})json",
    R"json({
  "name": "example1-zero-state",
  "description": "the detuned pair again, but relaxed: with zero initial conditions the orders agree",
  "action": "check-commute",
  "horizon": 50,
  "with_ics": false,
  "systems": {
    "A": {"order": 1, "coefficients": ["(k+1)^2", "exp(k)"], "initial_state": [0]},
    "B": {"order": 1, "coefficients": ["2*k^2 + 4*k + 3", "2*exp(k)"], "initial_state": [0]}
  },
  "input": "unit_sample(0)"
})json",
    R"json({
  "name": "example1-robustness",
  "description": "decaying disturbance injected at the interconnection of the relaxed pair; AB deviates less than BA",
  "action": "robustness",
  "horizon": 40,
  "systems": {
    "A": {"order": 1, "coefficients": ["(k+1)^2", "exp(k)"], "initial_state": [0]},
    "B": {"order": 1, "coefficients": ["2*k^2 + 4*k + 3", "2*exp(k)"], "initial_state": [0]}
  },
  "input": "unit_sample(0)",
  "disturbance": "0.04^k"
})json",
    R"json({
  "name": "example1-feedback",
  "description": "feedback conjugate with gains alpha=2, beta=0.5 (beta = 1 - 1/alpha): commutes despite nonzero initial conditions",
  "action": "feedback-pair",
  "horizon": 50,
  "with_ics": true,
  "alpha": 2.0,
  "beta": 0.5,
  "systems": {
    "A": {"order": 1, "coefficients": ["(k+1)^2", "exp(k)"], "initial_state": [2]}
  },
  "input": "1"
})json",
    R"json({
  "name": "example1-feedback-spoiled",
  "description": "feedback conjugate with beta=1: the gain constraint is violated and commutativity is lost",
  "action": "feedback-pair",
  "horizon": 50,
  "with_ics": true,
  "alpha": 2.0,
  "beta": 1.0,
  "systems": {
    "A": {"order": 1, "coefficients": ["(k+1)^2", "exp(k)"], "initial_state": [2]}
  },
  "input": "1"
})json",
    R"json({
  "name": "example2",
  "description": "amplitude modulator pair (carrier frequency 0.05): both orders produce the same modulated signal",
  "action": "check-commute",
  "horizon": 800,
  "with_ics": false,
  "systems": {
    "A": {"order": 1, "coefficients": ["9 + 3*sin(0.1*pi*k)", "10"], "initial_state": [0]},
    "B": {"order": 1, "coefficients": ["8 + 9*sin(0.1*pi*k)", "30"], "initial_state": [0]}
  },
  "input": "100*sin(0.005*pi*k)",
  "display_overlay": "0.2*sin(0.1*pi*k) - 0.155*sin(0.005*pi*k)",
  "envelope": {"begin": 200, "end": 800, "period": 20}
})json",
    R"json({
  "name": "example2-robustness",
  "description": "pulse noise at the modulator interconnection: order AB is less sensitive than BA",
  "action": "robustness",
  "horizon": 800,
  "systems": {
    "A": {"order": 1, "coefficients": ["9 + 3*sin(0.1*pi*k)", "10"], "initial_state": [0]},
    "B": {"order": 1, "coefficients": ["8 + 9*sin(0.1*pi*k)", "30"], "initial_state": [0]}
  },
  "input": "100*sin(0.005*pi*k)",
  "disturbance": "pulse_train(0.1, 2, 0.5)",
  "display_overlay": "0.2*sin(0.1*pi*k) - 0.155*sin(0.005*pi*k)",
  "envelope": {"begin": 200, "end": 800, "period": 20}
})json"};

}  // namespace

const std::vector<ScenarioConfig>& builtin_scenarios() {
  static const std::vector<ScenarioConfig> list = [] {
    std::vector<ScenarioConfig> v;
    for (const char* text : kBuiltinTexts) v.push_back(parse_config(text, ""));
    return v;
  }();
  return list;
}

const ScenarioConfig* find_builtin(const std::string& name) {
  for (const ScenarioConfig& c : builtin_scenarios()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// --- runner -----------------------------------------------------------------

std::string RunReport::value(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  return "";
}

namespace {

class Runner {
 public:
  Runner(const ScenarioConfig& config, const std::filesystem::path& out_dir, RunReport& report)
      : config_(config), dir_(out_dir), report_(report), tol_(config.tol()) {}

  void dispatch() {
    switch (config_.action) {
      case Action::Simulate: return run_simulate();
      case Action::Cascade: return run_cascade();
      case Action::CheckCommute: return run_check_commute();
      case Action::Synthesize: return run_synthesize();
      case Action::FeedbackPair: return run_feedback_pair();
      case Action::ZeroOrder: return run_zero_order();
      case Action::Robustness: return run_robustness();
    }
  }

 private:
  LtvSystem build(const std::string& label) const { return config_.system(label).build(label); }

  void emit(const std::string& signal_name, const Signal& s) {
    const auto path = dir_ / (config_.name + "_" + signal_name + ".csv");
    write_csv(path, s);
    report_.outputs.push_back(path);
  }

  void add(const std::string& key, const std::string& value) {
    report_.entries.emplace_back(key, value);
  }
  void add(const std::string& key, double v) { add(key, fmt_double(v)); }
  void add(const std::string& key, bool v) { add(key, fmt_bool(v)); }

  void add_violation(const std::optional<ConditionViolation>& v) {
    if (!v) return;
    add("first_violation",
        v->tag + " at k=" + std::to_string(v->k) + " residual=" + fmt_double(v->residual));
  }

  Signal overlay_signal(long K) const {
    return Signal::from_expression(Expr::parse(*config_.display_overlay), K);
  }

  void maybe_modulation_index(const Signal& display) {
    if (!config_.envelope) return;
    const EnvelopeSpec& env = *config_.envelope;
    const long end = std::min(env.end, display.horizon());
    // a shortened horizon can leave too little room for two carrier periods
    if (env.begin > end || env.begin + 2 * env.period - 1 > end) return;
    add("modulation_index", modulation_index(display, env.begin, end, env.period));
  }

  void run_simulate() {
    const LtvSystem sys = build(config_.first);
    const long K = config_.horizon;
    const Signal x = config_.input.materialize(K);
    const Signal y = simulate(sys, x, K);
    add("system", config_.first);
    add("input", config_.input.describe());
    emit("output", y);
    if (config_.display_overlay) {
      const Signal display = y + overlay_signal(K);
      emit("output_display", display);
      maybe_modulation_index(display);
    }
    add("max_abs_output", y.max_abs());
  }

  void run_cascade() {
    std::string first_label = config_.first;
    std::string second_label = config_.second;
    if (config_.order == CascadeOrder::BA) std::swap(first_label, second_label);
    const LtvSystem F = build(first_label);
    const LtvSystem S = build(second_label);
    const long K = config_.horizon;
    const Signal x = config_.input.materialize(K);

    add("feed_order", first_label + " -> " + second_label);
    add("input", config_.input.describe());
    const Signal chain = cascade_chain(F, S, x, K);
    emit("chain", chain);

    // the explicit combined system exists for first*first and first*zero pairs
    if (F.order() == 1 && S.order() == 1) {
      const CascadeSystem cs = cascade_first_order(F, S, K);
      const Signal structural = simulate(cs.inner, x, K);
      emit("structural", structural);
      add("structural_vs_chain", max_abs_difference(structural, chain));
    } else if (F.order() == 1 && S.order() == 0) {
      const LtvSystem combined = cascade_with_zero_order(F, S, CascadeOrder::AB, K);
      const Signal structural = simulate(combined, x, K);
      emit("structural", structural);
      add("structural_vs_chain", max_abs_difference(structural, chain));
    } else if (F.order() == 0 && S.order() == 1) {
      const LtvSystem combined = cascade_with_zero_order(S, F, CascadeOrder::BA, K);
      const Signal structural = simulate(combined, x, K);
      emit("structural", structural);
      add("structural_vs_chain", max_abs_difference(structural, chain));
    }
    add("max_abs_output", chain.max_abs());
  }

  // Common tail for the pairwise checks: simulate both orders on the
  // configured input, emit CSVs, and probe with random inputs.
  void commute_outputs(const LtvSystem& A, const LtvSystem& B,
                       const CommutativityReport& conditions) {
    const long K = config_.horizon;
    LtvSystem a = A, b = B;
    if (!config_.with_initial_conditions) {
      a = A.with_zero_state();
      b = B.with_zero_state();
    }
    const Signal x = config_.input.materialize(K);
    const Signal y_ab = cascade_chain(a, b, x, K);
    const Signal y_ba = cascade_chain(b, a, x, K);
    emit("ab", y_ab);
    emit("ba", y_ba);
    if (config_.display_overlay) {
      const Signal ov = overlay_signal(K);
      const Signal ab_display = y_ab + ov;
      emit("ab_display", ab_display);
      emit("ba_display", y_ba + ov);
      maybe_modulation_index(ab_display);
    }
    add("commutative", conditions.verdict());
    add("zero_state_ok", conditions.zero_state_ok);
    add("general_ok", conditions.general_ok);
    add("ic_constraint_ok", conditions.ic_constraint_ok);
    add("zero_input_sufficient_ok", conditions.zero_input_sufficient_ok);
    add_violation(conditions.first_violation);
    add("max_output_difference", max_abs_difference(y_ab, y_ba));

    // randomized probe of the operational definition
    Rng rng(config_.seed);
    bool agree = true;
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> samples(static_cast<std::size_t>(K) + 1);
      for (double& v : samples) v = rng.uniform(-1.0, 1.0);
      const Signal xr{samples};
      const Signal ab = cascade_chain(a, b, xr, K);
      const Signal ba = cascade_chain(b, a, xr, K);
      agree = agree && approx_equal(ab, ba, tol_);
      worst = std::max(worst, max_abs_difference(ab, ba));
    }
    add("simulated_agreement", agree);
    add("max_simulated_difference", worst);

    report_.exit_code = conditions.verdict() ? 0 : 1;
  }

  void run_check_commute() {
    const LtvSystem A = build(config_.first);
    const LtvSystem B = build(config_.second);
    const CommutativityReport conditions =
        check_conditions(A, B, config_.horizon, config_.with_initial_conditions, tol_);
    commute_outputs(A, B, conditions);
  }

  void run_synthesize() {
    const LtvSystem A = build(config_.first);
    if (!config_.c1) throw SchemaError("synthesize needs 'c1'", "c1");
    const long K = config_.horizon;
    const double y0 = A.initial_state()[0];
    const double required = required_c0(A, *config_.c1);
    const double c0 = config_.c0 ? *config_.c0 : required;
    const LtvSystem B = synthesize_pair(A, {c0, *config_.c1}, K, y0);
    emit("b1", Signal(B.coeff(1).tabulate(K)));
    emit("b0", Signal(B.coeff(0).tabulate(K)));
    add("c1", *config_.c1);
    add("c0", c0);
    add("required_c0", required);
    add("ic_rule_ok", y0 == 0.0 || coeff_equal(required, c0, tol_));
    add("pair_b1", B.coeff(1).describe());
    add("pair_b0", B.coeff(0).describe());
  }

  void run_feedback_pair() {
    const LtvSystem A = build(config_.first);
    if (!config_.alpha) throw SchemaError("feedback-pair needs 'alpha'", "alpha");
    if (!config_.beta) throw SchemaError("feedback-pair needs 'beta'", "beta");
    const long K = config_.horizon;
    const FeedbackGains gains{*config_.alpha, *config_.beta};
    const FeedbackPairResult res = feedback_pair(A, gains, K + 1);
    add("alpha", gains.alpha);
    add("beta", gains.beta);
    add("gain_constraint_ok", !res.gain_constraint_warning);
    emit("b1", Signal(res.system.coeff(1).tabulate(K)));
    emit("b0", Signal(res.system.coeff(0).tabulate(K)));
    const CommutativityReport conditions =
        check_conditions(A, res.system, K, config_.with_initial_conditions, tol_);
    commute_outputs(A, res.system, conditions);
  }

  void run_zero_order() {
    const LtvSystem A = build(config_.first);
    const LtvSystem Z = build(config_.second);
    const long K = config_.horizon;
    const CommutativityReport rep =
        zero_order_commutes(A, Z, K, config_.with_initial_conditions, tol_);

    LtvSystem a = config_.with_initial_conditions ? A : A.with_zero_state();
    const Signal x = config_.input.materialize(K);
    const Signal az = cascade_chain(a, Z, x, K);
    const Signal za = cascade_chain(Z, a, x, K);
    emit("ab", az);
    emit("ba", za);
    add("commutative", rep.verdict());
    add("zero_state_ok", rep.zero_state_ok);
    add("general_ok", rep.general_ok);
    add("time_invariant_gain", rep.general_ok);
    add("ic_constraint_ok", rep.ic_constraint_ok);
    add_violation(rep.first_violation);
    add("max_output_difference", max_abs_difference(az, za));
    report_.exit_code = rep.verdict() ? 0 : 1;
  }

  void run_robustness() {
    const LtvSystem A = build(config_.first);
    const LtvSystem B = build(config_.second);
    const long K = config_.horizon;
    if (!config_.disturbance) throw SchemaError("robustness needs 'disturbance'", "disturbance");
    const Signal x = config_.input.materialize(K);
    const Signal d = config_.disturbance->materialize(K);
    const RobustnessReport rep = inject_and_compare(A, B, x, d, K);

    emit("clean_ab", rep.clean_ab);
    emit("noisy_ab", rep.noisy_ab);
    emit("clean_ba", rep.clean_ba);
    emit("noisy_ba", rep.noisy_ba);
    emit("deviation_ab", rep.deviation_ab);
    emit("deviation_ba", rep.deviation_ba);
    if (config_.display_overlay) {
      const Signal ov = overlay_signal(K);
      const Signal clean_display = rep.clean_ab + ov;
      emit("clean_ab_display", clean_display);
      emit("noisy_ab_display", rep.noisy_ab + ov);
      emit("clean_ba_display", rep.clean_ba + ov);
      emit("noisy_ba_display", rep.noisy_ba + ov);
      maybe_modulation_index(clean_display);
    }
    add("input", config_.input.describe());
    add("disturbance", config_.disturbance->describe());
    const char* winner = rep.winner == CascadeWinner::AB   ? "AB"
                         : rep.winner == CascadeWinner::BA ? "BA"
                                                           : "tie";
    add("winner", std::string(winner));
    add("max_dev_ab", rep.max_abs_ab);
    add("max_dev_ba", rep.max_abs_ba);
    add("bounds_ab_min", rep.min_ab);
    add("bounds_ab_max", rep.max_ab);
    add("bounds_ba_min", rep.min_ba);
    add("bounds_ba_max", rep.max_ba);
  }

  const ScenarioConfig& config_;
  const std::filesystem::path& dir_;
  RunReport& report_;
  Tolerance tol_;
};

}  // namespace

RunReport run(const ScenarioConfig& config, const std::filesystem::path& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  std::filesystem::create_directories(out_dir);

  RunReport report;
  report.scenario = config.name;
  report.action = to_string(config.action);
  report.entries.emplace_back("scenario", config.name);
  report.entries.emplace_back("action", to_string(config.action));
  report.entries.emplace_back("horizon", std::to_string(config.horizon));

  Runner runner(config, out_dir, report);
  runner.dispatch();

  const auto t1 = std::chrono::steady_clock::now();
  report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();

  const auto report_path = out_dir / "report.txt";
  std::ofstream out(report_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + report_path.string());
  for (const auto& [key, value] : report.entries) out << key << ": " << value << "\n";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", report.wall_seconds);
  out << "wall_time_s: " << buf << "\n";
  return report;
}

}  // namespace ltv
