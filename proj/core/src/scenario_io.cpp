#include "dads/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

#include "dads/errors.hpp"

namespace dads {

namespace {

std::string trim(std::string_view sv) {
  const auto first = sv.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = sv.find_last_not_of(" \t\r");
  return std::string(sv.substr(first, last - first + 1));
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string tok = trim(text);
  double v = 0.0;
  const auto* begin = tok.data();
  const auto* end = tok.data() + tok.size();
  auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError(what + ": expected a number, got '" + tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

Vec parse_vector(const std::string& text, const std::string& what) {
  Vec out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_double(tok, what));
  if (out.empty()) throw ConfigError(what + ": expected at least one number");
  return out;
}

// --- signal descriptors ---------------------------------------------------

std::vector<double> parse_args(const std::string& inner, const std::string& what) {
  std::vector<double> out;
  for (const auto& piece : split(inner, ',')) out.push_back(parse_double(piece, what));
  return out;
}

std::vector<Signal> parse_descriptor(const std::string& desc, const std::string& what) {
  const std::string d = trim(desc);
  if (d == "zero") return {Signal::zero()};

  const auto open = d.find('(');
  if (open == std::string::npos || d.back() != ')')
    throw ConfigError(what + ": bad signal descriptor '" + d +
                      "' (expected zero, const(...), sin(...) or steps(...))");
  const std::string head = trim(d.substr(0, open));
  const std::string inner = d.substr(open + 1, d.size() - open - 2);

  if (head == "const") {
    std::vector<Signal> out;
    for (double v : parse_args(inner, what)) out.push_back(Signal::constant(v));
    return out;
  }
  if (head == "sin") {
    const auto args = parse_args(inner, what);
    if (args.size() != 3)
      throw ConfigError(what + ": sin(...) takes amplitude, omega, phase");
    return {Signal::sinusoid(args[0], args[1], args[2])};
  }
  if (head == "steps") {
    std::vector<double> times, values;
    for (const auto& piece : split(inner, ',')) {
      const auto parts = split(piece, ':');
      if (parts.size() != 2)
        throw ConfigError(what + ": steps(...) entries must look like time:value");
      times.push_back(parse_double(parts[0], what));
      values.push_back(parse_double(parts[1], what));
    }
    try {
      Signal s = Signal::steps(std::move(times), std::move(values));
      return {s};
    } catch (const ConfigError& e) {
      throw ConfigError(what + ": " + e.what());
    }
  }
  throw ConfigError(what + ": unknown signal descriptor '" + head + "'");
}

VectorSignal parse_signal(const std::string& text, const std::string& what) {
  VectorSignal vs;
  for (const auto& piece : split(text, ';'))
    for (auto& s : parse_descriptor(piece, what)) vs.comp.push_back(std::move(s));
  return vs;
}

std::string write_args(const std::vector<double>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += format_double(args[i]);
  }
  return out;
}

std::string write_one_signal(const Signal& s) {
  switch (s.kind) {
    case Signal::Kind::Zero:
      return "zero";
    case Signal::Kind::Constant:
      return "const(" + format_double(s.value) + ")";
    case Signal::Kind::Sinusoid:
      return "sin(" + write_args({s.amplitude, s.omega, s.phase}) + ")";
    case Signal::Kind::Steps: {
      std::string out = "steps(";
      for (std::size_t i = 0; i < s.step_times.size(); ++i) {
        if (i) out += ", ";
        out += format_double(s.step_times[i]) + ":" + format_double(s.step_values[i]);
      }
      return out + ")";
    }
  }
  return "zero";
}

std::string write_signal(const VectorSignal& vs) {
  const bool all_zero = std::all_of(vs.comp.begin(), vs.comp.end(), [](const Signal& s) {
    return s.kind == Signal::Kind::Zero;
  });
  if (all_zero) return "zero";
  const bool all_const = std::all_of(vs.comp.begin(), vs.comp.end(), [](const Signal& s) {
    return s.kind == Signal::Kind::Constant;
  });
  if (all_const) {
    std::vector<double> vals;
    for (const auto& s : vs.comp) vals.push_back(s.value);
    return "const(" + write_args(vals) + ")";
  }
  std::string out;
  for (std::size_t i = 0; i < vs.comp.size(); ++i) {
    if (i) out += "; ";
    out += write_one_signal(vs.comp[i]);
  }
  return out;
}

// --- sectioned key/value parsing -------------------------------------------

using Section = std::map<std::string, std::string>;

std::map<std::string, Section> parse_ini(const std::string& text, const std::string& origin) {
  std::map<std::string, Section> doc;
  std::string section;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      doc[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside any section");
    const std::string key = trim(line.substr(0, eq));
    if (doc[section].count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                        "' in [" + section + "]");
    doc[section][key] = trim(line.substr(eq + 1));
  }
  return doc;
}

class SectionReader {
public:
  SectionReader(const std::map<std::string, Section>& doc, const std::string& name)
      : name_(name) {
    const auto it = doc.find(name);
    if (it == doc.end()) throw ConfigError("missing section [" + name + "]");
    section_ = &it->second;
  }

  std::string require(const std::string& key) {
    const auto it = section_->find(key);
    if (it == section_->end())
      throw ConfigError("missing required key '" + key + "' in [" + name_ + "]");
    used_.insert(key);
    return it->second;
  }

  std::optional<std::string> optional(const std::string& key) {
    const auto it = section_->find(key);
    if (it == section_->end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  double require_double(const std::string& key) {
    return parse_double(require(key), name_ + "." + key);
  }

  void finish() const {
    for (const auto& [key, value] : *section_)
      if (!used_.count(key))
        throw ConfigError("unknown key '" + key + "' in [" + name_ + "]");
  }

  const std::string& name() const { return name_; }

private:
  const Section* section_;
  std::string name_;
  std::set<std::string> used_;
};

void expand_zero(VectorSignal& vs, int dim, const std::string& what) {
  if (vs.dim() == 1 && vs.comp[0].kind == Signal::Kind::Zero && dim > 1)
    vs.comp.assign(dim, Signal::zero());
  if (vs.dim() != dim)
    throw ConfigError(what + ": expected " + std::to_string(dim) + " component(s), got " +
                      std::to_string(vs.dim()));
}

void validate_spec(ScenarioSpec& spec) {
  if (spec.plant_preset != "double-integrator")
    throw ConfigError("plant.preset: unknown plant '" + spec.plant_preset + "'");
  if (spec.clf_preset != "double-integrator")
    throw ConfigError("clf.preset: unknown bundle '" + spec.clf_preset + "'");
  if (!(spec.clf_c > 0.0)) throw ConfigError("clf.c: requires c > 0");

  if (spec.kind == ControllerConfig::Kind::Dads) {
    if (!(spec.epsilon > 0.0)) throw ConfigError("controller.epsilon: requires epsilon > 0");
    if (!(spec.gamma > 0.0)) throw ConfigError("controller.gamma: requires gamma > 0");
    if (!(spec.damping > 0.0)) throw ConfigError("controller.damping: requires damping > 0");
    if (!(spec.kappa > 0.0)) throw ConfigError("controller.kappa: requires kappa > 0");
    if (spec.variant == GainVariant::Full && 2.0 * spec.damping * spec.kappa < 1.0)
      throw ConfigError("controller: variant=full requires 2*damping*kappa >= 1");
    if (!(spec.rho0 > spec.kappa))
      throw ConfigError("initial.rho0: requires rho0 > kappa (rho0 = " +
                        format_double(spec.rho0) + ", kappa = " + format_double(spec.kappa) +
                        ")");
  } else {
    if (spec.sigma_bar < 0.0)
      throw ConfigError("controller.sigma_bar: requires sigma_bar >= 0");
    if (!(spec.gamma > 0.0)) throw ConfigError("controller.gamma: requires gamma > 0");
    if (spec.thetahat0.size() != 2)
      throw ConfigError("initial.thetahat0: expected 2 components");
  }

  if (spec.y0.size() != 2) throw ConfigError("initial.y0: expected 2 components");

  expand_zero(spec.d, 1, "disturbance.d");
  expand_zero(spec.theta, 2, "disturbance.theta");
  expand_zero(spec.b, 1, "disturbance.b");
  for (const auto& s : spec.b.comp) {
    const bool ok = (s.kind == Signal::Kind::Constant && s.value > 0.0) ||
                    (s.kind == Signal::Kind::Steps && s.inf_value() > 0.0);
    if (!ok)
      throw ConfigError("disturbance.b: must be a positive constant or positive steps signal");
  }

  if (!(spec.horizon > 0.0)) throw ConfigError("sim.horizon: requires horizon > 0");
  if (!(spec.dt > 0.0)) throw ConfigError("sim.dt: requires dt > 0");
  if (spec.dt > spec.horizon) throw ConfigError("sim.dt: requires dt <= horizon");
  if (!(spec.blowup_threshold > 0.0))
    throw ConfigError("sim.blowup_threshold: requires a positive value");
  if (spec.stride < 1) throw ConfigError("output.stride: requires stride >= 1");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ScenarioSpec parse_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

ScenarioSpec parse_scenario_text(const std::string& text, const std::string& origin) {
  const auto doc = parse_ini(text, origin);
  static const std::set<std::string> known_sections{
      "plant", "clf", "controller", "initial", "disturbance", "sim", "output"};
  for (const auto& [name, _] : doc)
    if (!known_sections.count(name)) throw ConfigError("unknown section [" + name + "]");

  ScenarioSpec spec;

  SectionReader plant(doc, "plant");
  spec.plant_preset = plant.require("preset");
  plant.finish();

  SectionReader clf(doc, "clf");
  spec.clf_preset = clf.require("preset");
  spec.clf_c = clf.require_double("c");
  clf.finish();

  SectionReader ctrl(doc, "controller");
  const std::string kind = ctrl.require("kind");
  if (kind == "dads") {
    spec.kind = ControllerConfig::Kind::Dads;
    const std::string variant = ctrl.require("variant");
    if (variant == "full")
      spec.variant = GainVariant::Full;
    else if (variant == "simplified")
      spec.variant = GainVariant::Simplified;
    else if (variant == "matched")
      spec.variant = GainVariant::Matched;
    else
      throw ConfigError("controller.variant: unknown variant '" + variant +
                        "' (expected full, simplified or matched)");
    spec.epsilon = ctrl.require_double("epsilon");
    spec.gamma = ctrl.require_double("gamma");
    spec.damping = ctrl.require_double("damping");
    spec.kappa = ctrl.require_double("kappa");
  } else if (kind == "sigma-mod") {
    spec.kind = ControllerConfig::Kind::SigmaMod;
    spec.sigma_bar = ctrl.require_double("sigma_bar");
    spec.gamma = ctrl.require_double("gamma");
  } else {
    throw ConfigError("controller.kind: unknown controller kind '" + kind +
                      "' (expected dads or sigma-mod)");
  }
  ctrl.finish();

  SectionReader init(doc, "initial");
  spec.y0 = parse_vector(init.require("y0"), "initial.y0");
  spec.rho0 = init.require_double("rho0");
  if (spec.kind == ControllerConfig::Kind::SigmaMod)
    spec.thetahat0 = parse_vector(init.require("thetahat0"), "initial.thetahat0");
  init.finish();

  SectionReader dist(doc, "disturbance");
  spec.d = parse_signal(dist.require("d"), "disturbance.d");
  spec.theta = parse_signal(dist.require("theta"), "disturbance.theta");
  spec.b = parse_signal(dist.require("b"), "disturbance.b");
  dist.finish();

  SectionReader sim(doc, "sim");
  spec.horizon = sim.require_double("horizon");
  spec.dt = sim.require_double("dt");
  if (const auto v = sim.optional("blowup_threshold"))
    spec.blowup_threshold = parse_double(*v, "sim.blowup_threshold");
  if (const auto v = sim.optional("seed")) {
    const double s = parse_double(*v, "sim.seed");
    if (s < 0.0 || s != std::floor(s)) throw ConfigError("sim.seed: expected a nonnegative integer");
    spec.seed = static_cast<std::uint64_t>(s);
  }
  sim.finish();

  SectionReader out(doc, "output");
  spec.out_dir = out.require("dir");
  const double stride = parse_double(out.require("stride"), "output.stride");
  if (stride < 1.0 || stride != std::floor(stride))
    throw ConfigError("output.stride: expected a positive integer");
  spec.stride = static_cast<int>(stride);
  out.finish();

  validate_spec(spec);
  return spec;
}

std::string scenario_to_text(const ScenarioSpec& spec) {
  std::ostringstream out;
  out << "[plant]\n";
  out << "preset = " << spec.plant_preset << "\n\n";

  out << "[clf]\n";
  out << "preset = " << spec.clf_preset << "\n";
  out << "c = " << format_double(spec.clf_c) << "\n\n";

  out << "[controller]\n";
  if (spec.kind == ControllerConfig::Kind::Dads) {
    out << "kind = dads\n";
    const char* variant = spec.variant == GainVariant::Full         ? "full"
                          : spec.variant == GainVariant::Simplified ? "simplified"
                                                                    : "matched";
    out << "variant = " << variant << "\n";
    out << "epsilon = " << format_double(spec.epsilon) << "\n";
    out << "gamma = " << format_double(spec.gamma) << "\n";
    out << "damping = " << format_double(spec.damping) << "\n";
    out << "kappa = " << format_double(spec.kappa) << "\n";
  } else {
    out << "kind = sigma-mod\n";
    out << "sigma_bar = " << format_double(spec.sigma_bar) << "\n";
    out << "gamma = " << format_double(spec.gamma) << "\n";
  }
  out << "\n[initial]\n";
  out << "y0 =";
  for (double v : spec.y0) out << " " << format_double(v);
  out << "\n";
  out << "rho0 = " << format_double(spec.rho0) << "\n";
  if (spec.kind == ControllerConfig::Kind::SigmaMod) {
    out << "thetahat0 =";
    for (double v : spec.thetahat0) out << " " << format_double(v);
    out << "\n";
  }

  out << "\n[disturbance]\n";
  out << "d = " << write_signal(spec.d) << "\n";
  out << "theta = " << write_signal(spec.theta) << "\n";
  out << "b = " << write_signal(spec.b) << "\n";

  out << "\n[sim]\n";
  out << "horizon = " << format_double(spec.horizon) << "\n";
  out << "dt = " << format_double(spec.dt) << "\n";
  out << "blowup_threshold = " << format_double(spec.blowup_threshold) << "\n";
  out << "seed = " << spec.seed << "\n";

  out << "\n[output]\n";
  out << "dir = " << spec.out_dir << "\n";
  out << "stride = " << spec.stride << "\n";
  return out.str();
}

void write_scenario(const ScenarioSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write scenario file '" + path + "'");
  out << scenario_to_text(spec);
  if (!out) throw IoError("failed writing scenario file '" + path + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"c1-noleak-0", "c1-leak-0",     "dads-0",
                                              "c1-noleak-sin", "c1-leak-sin", "dads-sin"};
  return names;
}

ScenarioSpec preset_spec(const std::string& name) {
  const auto& names = preset_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + name + "'; valid presets: " + list);
  }

  ScenarioSpec spec;
  spec.clf_c = 0.5;
  spec.y0 = {1.0, 0.0};
  spec.rho0 = 0.11;
  spec.theta.comp = {Signal::constant(1.0), Signal::constant(1.0)};
  spec.b.comp = {Signal::constant(0.01)};
  spec.horizon = 100.0;
  spec.dt = 1e-4;
  spec.blowup_threshold = 1e8;
  spec.seed = 1;
  spec.stride = 100;
  spec.out_dir = "out/" + name;

  const bool sinusoid = name.size() > 4 && name.substr(name.size() - 4) == "-sin";
  spec.d.comp = {sinusoid ? Signal::sinusoid(2.0, 1.0, 0.0) : Signal::zero()};

  if (name.rfind("dads", 0) == 0) {
    spec.kind = ControllerConfig::Kind::Dads;
    spec.variant = GainVariant::Simplified;
    spec.epsilon = 0.005;
    spec.gamma = 20.0;
    spec.damping = 1.0;
    spec.kappa = 0.1;  // rho0 = 0.11 puts the adapted part at exp(z0) = 0.01
  } else {
    spec.kind = ControllerConfig::Kind::SigmaMod;
    spec.sigma_bar = name.rfind("c1-leak", 0) == 0 ? 0.2 : 0.0;
    spec.gamma = 20.0;
    spec.thetahat0 = {0.0, 0.0};
  }
  return spec;
}

Scenario build_scenario(const ScenarioSpec& spec) {
  Scenario sc;
  sc.plant = double_integrator_plant();
  sc.clf = double_integrator_clf(spec.clf_c);
  if (spec.kind == ControllerConfig::Kind::Dads) {
    sc.controller.kind = ControllerConfig::Kind::Dads;
    sc.controller.dads = {spec.epsilon, spec.gamma, spec.damping, spec.kappa, spec.variant};
  } else {
    sc.controller.kind = ControllerConfig::Kind::SigmaMod;
    sc.controller.c1 = {spec.sigma_bar, spec.gamma, spec.clf_c};
    sc.thetahat0 = spec.thetahat0;
  }
  sc.y0 = spec.y0;
  sc.rho0 = spec.rho0;
  sc.disturbance = {spec.d, spec.theta, spec.b};
  sc.horizon = spec.horizon;
  sc.dt = spec.dt;
  sc.blowup_threshold = spec.blowup_threshold;
  sc.seed = spec.seed;
  return sc;
}

double b_floor(const VectorSignal& b) {
  double floor = std::numeric_limits<double>::infinity();
  for (const auto& s : b.comp) floor = std::min(floor, s.inf_value());
  return floor;
}

std::string csv_header(const Trajectory& traj) {
  std::string h = "t";
  for (int j = 1; j <= traj.n; ++j) h += ",y" + std::to_string(j);
  if (traj.controller_kind == ControllerConfig::Kind::Dads)
    h += ",rho,z";
  else
    h += ",thetahat1,thetahat2,rho";
  for (int j = 1; j <= traj.m; ++j) h += ",u" + std::to_string(j);
  h += ",V,rho_dot";
  for (int j = 1; j <= traj.q; ++j) h += ",d" + std::to_string(j);
  for (int j = 1; j <= traj.p; ++j) h += ",theta" + std::to_string(j);
  for (int j = 1; j <= traj.m; ++j) h += ",b" + std::to_string(j);
  return h;
}

void emit_csv(const Trajectory& traj, int stride, const std::string& path) {
  if (stride < 1) throw ConfigError("emit_csv: stride must be >= 1");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");

  out << csv_header(traj) << "\n";
  const bool is_dads = traj.controller_kind == ControllerConfig::Kind::Dads;
  std::string row;
  for (std::size_t k = 0; k < traj.samples(); k += stride) {
    row.clear();
    row += format_double(traj.t[k]);
    for (int j = 0; j < traj.n; ++j) row += "," + format_double(traj.y[j][k]);
    if (is_dads) {
      row += "," + format_double(traj.rho[k]);
      row += "," + format_double(std::log(traj.rho[k] - traj.kappa));
    } else {
      row += "," + format_double(traj.thetahat[0][k]);
      row += "," + format_double(traj.thetahat[1][k]);
      row += "," + format_double(traj.rho[k]);
    }
    for (int j = 0; j < traj.m; ++j) row += "," + format_double(traj.u[j][k]);
    row += "," + format_double(traj.V[k]);
    row += "," + format_double(traj.rho_dot[k]);
    for (int j = 0; j < traj.q; ++j) row += "," + format_double(traj.d[j][k]);
    for (int j = 0; j < traj.p; ++j) row += "," + format_double(traj.theta[j][k]);
    for (int j = 0; j < traj.m; ++j) row += "," + format_double(traj.b[j][k]);
    out << row << "\n";
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

RunReports analyze_run(const ScenarioSpec& spec, const Scenario& scenario,
                       const Trajectory& traj) {
  RunReports reports;
  reports.tail = tail_stats(traj, reports.tail_fraction);
  reports.drift = drift_metric(traj, reports.split);
  reports.b_floor = b_floor(spec.b);

  if (spec.kind == ControllerConfig::Kind::Dads) {
    reports.deadzone = deadzone_check(traj, spec.epsilon);
    reports.certificate = dads_certificate(scenario.plant, traj, scenario.clf,
                                           scenario.controller.dads, reports.b_floor);
  } else {
    const bool const_theta = std::all_of(spec.theta.comp.begin(), spec.theta.comp.end(),
                                         [](const Signal& s) { return s.is_constant(); });
    const bool const_b = std::all_of(spec.b.comp.begin(), spec.b.comp.end(),
                                     [](const Signal& s) { return s.is_constant(); });
    if (const_theta && const_b)
      reports.certificate = c1_certificate(traj, scenario.controller.c1);
    else
      reports.certificate_note = "skipped: certificate requires constant theta and b";
  }
  return reports;
}

void write_summary(const ScenarioSpec& spec, const Trajectory& traj,
                   const RunReports& reports, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");

  const bool is_dads = spec.kind == ControllerConfig::Kind::Dads;
  out << "controller = " << (is_dads ? "dads" : "sigma-mod") << "\n";
  if (is_dads) {
    const char* variant = spec.variant == GainVariant::Full         ? "full"
                          : spec.variant == GainVariant::Simplified ? "simplified"
                                                                    : "matched";
    out << "variant = " << variant << "\n";
    out << "epsilon = " << format_double(spec.epsilon) << "\n";
    out << "kappa = " << format_double(spec.kappa) << "\n";
    out << "z0 = " << format_double(std::log(spec.rho0 - spec.kappa)) << "\n";
  } else {
    out << "sigma_bar = " << format_double(spec.sigma_bar) << "\n";
  }
  out << "gamma = " << format_double(spec.gamma) << "\n";
  out << "horizon = " << format_double(spec.horizon) << "\n";
  out << "dt = " << format_double(spec.dt) << "\n";
  out << "samples = " << traj.samples() << "\n";
  out << "seed = " << spec.seed << "\n";
  out << "b_floor = " << format_double(reports.b_floor) << "\n";

  out << "tail_fraction = " << format_double(reports.tail_fraction) << "\n";
  out << "tail_max_V = " << format_double(reports.tail.max_V) << "\n";
  out << "tail_max_y_norm = " << format_double(reports.tail.max_y_norm) << "\n";
  out << "tail_mean_V = " << format_double(reports.tail.mean_V) << "\n";

  out << "drift_split = " << format_double(reports.split) << "\n";
  out << "rho_end = " << format_double(reports.drift.rho_end) << "\n";
  out << "rho_late_increment = " << format_double(reports.drift.late_increment) << "\n";

  if (reports.deadzone) {
    out << "deadzone_activity_fraction = " << format_double(reports.deadzone->activity_fraction)
        << "\n";
    out << "deadzone_max_rate = " << format_double(reports.deadzone->max_rate_in_deadzone)
        << "\n";
  }
  if (reports.certificate) {
    out << "certificate_max_violation = " << format_double(reports.certificate->max_violation)
        << "\n";
    out << "certificate_violation_time = "
        << format_double(reports.certificate->violation_time) << "\n";
    out << "certificate_bound = " << reports.certificate->bound_descriptor << "\n";
  } else if (!reports.certificate_note.empty()) {
    out << "certificate = " << reports.certificate_note << "\n";
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace dads
