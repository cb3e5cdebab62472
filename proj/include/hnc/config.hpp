#pragma once

// Run configuration: flat `key = value` text, one key per line, `#` starts a
// comment. Every key has a default except the sub-band THz keys, which are
// required only when thz.model = subband. Numbers print in shortest
// round-trip form so the echoed configuration is byte-stable.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hnc/errors.hpp"
#include "hnc/hybrid.hpp"
#include "hnc/link_sim.hpp"
#include "hnc/molecular_channel.hpp"
#include "hnc/neural_channel.hpp"
#include "hnc/thz_channel.hpp"

namespace hnc::config {

enum class Tag { Reported, Calibrated, Chosen };

inline const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Reported: return "reported";
    case Tag::Calibrated: return "calibrated";
    case Tag::Chosen: return "chosen";
  }
  return "?";
}

enum class Spacing { Linear, Log };

struct Grid {
  double from = 0.0;
  double to = 0.0;
  std::uint64_t points = 0;
  Spacing spacing = Spacing::Linear;
};

struct RunConfig {
  // thz
  std::string thz_model = "simplified";
  double thz_bandwidth_hz = 1e11;
  double thz_snr_linear = 1e10;
  double thz_center_freq_hz = 1e12;
  double thz_distance_m = 0.01;
  double thz_absorption_per_m = 0.0;
  std::optional<double> thz_f_low_hz, thz_f_high_hz, thz_delta_f_hz, thz_tx_psd_w_per_hz,
      thz_noise_psd_w_per_hz;

  // molecular
  double mol_bandwidth_hz = 20.0;
  double mol_mean_power_w = 1e-12;
  double mol_temperature_k = 300.0;
  double mol_diffusion_m2_per_s = 1e-9;
  double mol_distance_m = 1e-4;
  double mol_detector_radius_m = 1e-5;
  std::string mol_tau_mode = "per_bandwidth";
  double mol_tau_factor = 0.5;
  double mol_tau_s = 0.025;
  std::string mode = "verbatim";

  // neural
  double neu_input_rate_pps = 1000.0;
  double neu_refractory_s = 1e-3;
  double neu_latency_sigma_s = 5e-6;

  // figure grids
  Grid fig8{1e-3, 1.0, 100, Spacing::Log};
  Grid fig9{1.0, 200.0, 200, Spacing::Log};
  Grid fig10{0.0, 5000.0, 100, Spacing::Linear};

  // generic sweep
  std::string sweep_param = "mol.bandwidth_hz";
  Grid sweep{1.0, 200.0, 50, Spacing::Log};

  // link simulation
  link::RelayConfig relay = [] {
    link::RelayConfig r;
    r.t2m_molecules_per_release = 20;
    r.m2n_detect_threshold = 5;
    r.vesicle_release_prob_per_ca = 0.5;
    r.vesicle_count = 4;
    return r;
  }();
  link::PropagationConfig prop;
  std::uint64_t sim_bits = 1000;
  std::uint64_t seed = 1;

  // outputs; empty means stdout / not written
  std::string out_csv;
  std::string out_svg;
  std::string out_trace_csv;
};

// ------------------------------------------------------------------ values

inline std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v)) {
    throw ConfigError(key, key + ": not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

inline std::uint64_t parse_u64(const std::string& key, std::string_view text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end) {
    throw ConfigError(key, key + ": not a nonnegative integer: '" + std::string(text) + "'");
  }
  return v;
}

enum class Constraint { Positive, NonNegative, Probability, AtLeastOne, AtLeastTwo, Any };

inline void check(const std::string& key, double v, Constraint c) {
  bool ok = true;
  const char* what = "";
  switch (c) {
    case Constraint::Positive: ok = v > 0.0; what = "must be > 0"; break;
    case Constraint::NonNegative: ok = v >= 0.0; what = "must be >= 0"; break;
    case Constraint::Probability: ok = v >= 0.0 && v <= 1.0; what = "must lie in [0, 1]"; break;
    case Constraint::AtLeastOne: ok = v >= 1.0; what = "must be >= 1"; break;
    case Constraint::AtLeastTwo: ok = v >= 2.0; what = "must be >= 2"; break;
    case Constraint::Any: break;
  }
  if (!ok) throw ConfigError(key, key + ": " + what + " (got " + format_double(v) + ")");
}

// ------------------------------------------------------------------ schema

enum class Kind { Real, Count, Choice, Text };

struct Entry {
  std::string key;
  Kind kind;
  Tag tag;
  std::string note;
  std::function<std::string(const RunConfig&)> get;  // empty string when unset
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<void(RunConfig&, double)> set_real;  // Real keys only
  bool optional = false;
};

namespace detail {

inline Entry real(std::string key, Tag tag, std::string note, Constraint c, double RunConfig::*field) {
  Entry e{key, Kind::Real, tag, std::move(note), nullptr, nullptr, nullptr};
  e.get = [field](const RunConfig& r) { return format_double(r.*field); };
  e.set_real = [key, c, field](RunConfig& r, double v) {
    check(key, v, c);
    r.*field = v;
  };
  e.set = [key, setter = e.set_real](RunConfig& r, std::string_view t) { setter(r, parse_double(key, t)); };
  return e;
}

inline Entry opt_real(std::string key, std::string note, std::optional<double> RunConfig::*field) {
  Entry e{key, Kind::Real, Tag::Chosen, std::move(note), nullptr, nullptr, nullptr, true};
  e.get = [field](const RunConfig& r) { return (r.*field) ? format_double(*(r.*field)) : std::string(); };
  e.set_real = [key, field](RunConfig& r, double v) {
    check(key, v, Constraint::Positive);
    r.*field = v;
  };
  e.set = [key, setter = e.set_real](RunConfig& r, std::string_view t) { setter(r, parse_double(key, t)); };
  return e;
}

template <typename Owner, typename Member>
Entry member_real(std::string key, Tag tag, std::string note, Constraint c, Owner RunConfig::*owner,
                  Member Owner::*field) {
  Entry e{key, Kind::Real, tag, std::move(note), nullptr, nullptr, nullptr};
  e.get = [owner, field](const RunConfig& r) { return format_double(r.*owner.*field); };
  e.set_real = [key, c, owner, field](RunConfig& r, double v) {
    check(key, v, c);
    r.*owner.*field = v;
  };
  e.set = [key, setter = e.set_real](RunConfig& r, std::string_view t) { setter(r, parse_double(key, t)); };
  return e;
}

template <typename Owner>
Entry member_count(std::string key, Tag tag, std::string note, Constraint c, Owner RunConfig::*owner,
                   std::uint64_t Owner::*field) {
  Entry e{key, Kind::Count, tag, std::move(note), nullptr, nullptr, nullptr};
  e.get = [owner, field](const RunConfig& r) { return std::to_string(r.*owner.*field); };
  e.set = [key, c, owner, field](RunConfig& r, std::string_view t) {
    const std::uint64_t v = parse_u64(key, t);
    check(key, static_cast<double>(v), c);
    r.*owner.*field = v;
  };
  return e;
}

inline Entry count(std::string key, Tag tag, std::string note, Constraint c, std::uint64_t RunConfig::*field) {
  Entry e{key, Kind::Count, tag, std::move(note), nullptr, nullptr, nullptr};
  e.get = [field](const RunConfig& r) { return std::to_string(r.*field); };
  e.set = [key, c, field](RunConfig& r, std::string_view t) {
    const std::uint64_t v = parse_u64(key, t);
    check(key, static_cast<double>(v), c);
    r.*field = v;
  };
  return e;
}

inline Entry choice(std::string key, Tag tag, std::vector<std::string> options, std::string RunConfig::*field) {
  std::string note;
  for (std::size_t i = 0; i < options.size(); ++i) note += (i ? " | " : "") + options[i];
  Entry e{key, Kind::Choice, tag, note, nullptr, nullptr, nullptr};
  e.get = [field](const RunConfig& r) { return r.*field; };
  e.set = [key, options, note, field](RunConfig& r, std::string_view t) {
    for (const auto& o : options) {
      if (t == o) {
        r.*field = o;
        return;
      }
    }
    throw ConfigError(key, key + ": expected one of " + note + ", got '" + std::string(t) + "'");
  };
  return e;
}

inline Entry text(std::string key, std::string note, std::string RunConfig::*field) {
  Entry e{key, Kind::Text, Tag::Chosen, std::move(note), nullptr, nullptr, nullptr};
  e.get = [field](const RunConfig& r) { return r.*field; };
  e.set = [field](RunConfig& r, std::string_view t) { r.*field = std::string(t); };
  return e;
}

inline void grid_entries(std::vector<Entry>& out, const std::string& prefix, const std::string& unit,
                         Grid RunConfig::*grid, Constraint lower, bool spacing_key) {
  out.push_back(member_real(prefix + ".from" + unit, Tag::Chosen, "first grid point", lower, grid, &Grid::from));
  out.push_back(member_real(prefix + ".to" + unit, Tag::Chosen, "last grid point", lower, grid, &Grid::to));
  out.push_back(member_count(prefix + ".points", Tag::Chosen, "grid size", Constraint::AtLeastTwo, grid,
                             &Grid::points));
  if (spacing_key) {
    Entry e{prefix + ".spacing", Kind::Choice, Tag::Chosen, "log | linear", nullptr, nullptr, nullptr};
    e.get = [grid](const RunConfig& r) { return std::string((r.*grid).spacing == Spacing::Log ? "log" : "linear"); };
    e.set = [key = e.key, grid](RunConfig& r, std::string_view t) {
      if (t == "log") {
        (r.*grid).spacing = Spacing::Log;
      } else if (t == "linear") {
        (r.*grid).spacing = Spacing::Linear;
      } else {
        throw ConfigError(key, key + ": expected log | linear, got '" + std::string(t) + "'");
      }
    };
    out.push_back(std::move(e));
  }
}

}  // namespace detail

inline const std::vector<Entry>& schema() {
  static const std::vector<Entry> entries = [] {
    using namespace detail;
    using C = Constraint;
    using R = RunConfig;
    using link::PropagationConfig;
    using link::RelayConfig;
    std::vector<Entry> s;
    s.push_back(choice("thz.model", Tag::Chosen, {"simplified", "subband"}, &R::thz_model));
    s.push_back(real("thz.bandwidth_hz", Tag::Chosen, "simplified model bandwidth", C::Positive, &R::thz_bandwidth_hz));
    s.push_back(real("thz.snr_linear", Tag::Chosen, "simplified model SNR before path loss", C::Positive,
                     &R::thz_snr_linear));
    s.push_back(real("thz.center_freq_hz", Tag::Chosen, "simplified model carrier", C::Positive,
                     &R::thz_center_freq_hz));
    s.push_back(real("thz.distance_m", Tag::Chosen, "link distance d1", C::Positive, &R::thz_distance_m));
    s.push_back(real("thz.absorption_per_m", Tag::Chosen, "k in the e^{k d} absorption factor", C::NonNegative,
                     &R::thz_absorption_per_m));
    const std::string sub = "required when thz.model = subband";
    s.push_back(opt_real("thz.f_low_hz", sub, &R::thz_f_low_hz));
    s.push_back(opt_real("thz.f_high_hz", sub, &R::thz_f_high_hz));
    s.push_back(opt_real("thz.delta_f_hz", sub, &R::thz_delta_f_hz));
    s.push_back(opt_real("thz.tx_psd_w_per_hz", sub, &R::thz_tx_psd_w_per_hz));
    s.push_back(opt_real("thz.noise_psd_w_per_hz", sub, &R::thz_noise_psd_w_per_hz));

    s.push_back(real("mol.bandwidth_hz", Tag::Chosen, "W for the capacity report", C::Positive, &R::mol_bandwidth_hz));
    s.push_back(real("mol.mean_power_w", Tag::Reported, "mean thermodynamic power", C::Positive, &R::mol_mean_power_w));
    s.push_back(real("mol.temperature_k", Tag::Reported, "", C::Positive, &R::mol_temperature_k));
    s.push_back(real("mol.diffusion_m2_per_s", Tag::Reported, "", C::Positive, &R::mol_diffusion_m2_per_s));
    s.push_back(real("mol.distance_m", Tag::Reported, "transmitter to detector d2", C::Positive, &R::mol_distance_m));
    s.push_back(real("mol.detector_radius_m", Tag::Chosen, "R_d", C::Positive, &R::mol_detector_radius_m));
    s.push_back(choice("mol.tau_mode", Tag::Chosen, {"per_bandwidth", "fixed"}, &R::mol_tau_mode));
    s.push_back(real("mol.tau_factor", Tag::Chosen, "c in tau = c / W (per_bandwidth)", C::Positive,
                     &R::mol_tau_factor));
    s.push_back(real("mol.tau_s", Tag::Chosen, "tau when mol.tau_mode = fixed", C::Positive, &R::mol_tau_s));
    s.push_back(choice("mode", Tag::Chosen, {"verbatim", "nats"}, &R::mode));

    s.push_back(real("neu.input_rate_pps", Tag::Chosen, "a for the capacity report", C::NonNegative,
                     &R::neu_input_rate_pps));
    s.push_back(real("neu.refractory_s", Tag::Reported, "delta", C::Positive, &R::neu_refractory_s));
    s.push_back(real("neu.latency_sigma_s", Tag::Reported, "sigma", C::Positive, &R::neu_latency_sigma_s));

    grid_entries(s, "fig8", "_m", &R::fig8, C::Positive, false);
    grid_entries(s, "fig9", "_hz", &R::fig9, C::Positive, false);
    grid_entries(s, "fig10", "_pps", &R::fig10, C::NonNegative, false);

    s.push_back(text("sweep.param", "any thz./mol./neu. number key", &R::sweep_param));
    grid_entries(s, "sweep", "", &R::sweep, C::Any, true);

    s.push_back(member_real("sim.t2m_charge_threshold", Tag::Chosen, "", C::Positive, &R::relay,
                            &RelayConfig::t2m_charge_threshold));
    s.push_back(member_real("sim.t2m_charge_per_pulse", Tag::Chosen, "", C::Positive, &R::relay,
                            &RelayConfig::t2m_charge_per_pulse));
    s.push_back(member_count("sim.t2m_pulses_per_one", Tag::Chosen, "THz pulses sent per 1", C::AtLeastOne, &R::relay,
                             &RelayConfig::t2m_pulses_per_one));
    s.push_back(member_count("sim.t2m_molecules_per_release", Tag::Chosen, "", C::AtLeastOne, &R::relay,
                             &RelayConfig::t2m_molecules_per_release));
    s.push_back(member_count("sim.m2n_detect_threshold", Tag::Chosen, "arrivals per window", C::AtLeastOne,
                             &R::relay, &RelayConfig::m2n_detect_threshold));
    s.push_back(member_count("sim.m2n_ions_per_release", Tag::Chosen, "", C::AtLeastOne, &R::relay,
                             &RelayConfig::m2n_ions_per_release));
    s.push_back(member_real("sim.vesicle_release_prob_per_ca", Tag::Chosen, "", C::Probability, &R::relay,
                            &RelayConfig::vesicle_release_prob_per_ca));
    s.push_back(member_count("sim.vesicle_count", Tag::Chosen, "", C::AtLeastOne, &R::relay,
                             &RelayConfig::vesicle_count));
    s.push_back(member_count("sim.molecules_per_vesicle", Tag::Chosen, "", C::AtLeastOne, &R::relay,
                             &RelayConfig::molecules_per_vesicle));
    s.push_back(member_count("sim.n2m_decision_threshold", Tag::Chosen, "spikes per window", C::AtLeastOne,
                             &R::relay, &RelayConfig::n2m_decision_threshold));
    s.push_back(member_real("sim.diffusion_m2_per_s", Tag::Chosen, "", C::Positive, &R::prop,
                            &PropagationConfig::diffusion_m2_s));
    s.push_back(member_real("sim.distance_m", Tag::Chosen, "source to detector centre", C::Positive, &R::prop,
                            &PropagationConfig::distance_m));
    s.push_back(member_real("sim.detector_radius_m", Tag::Chosen, "", C::Positive, &R::prop,
                            &PropagationConfig::detector_radius_m));
    s.push_back(member_real("sim.symbol_period_s", Tag::Chosen, "", C::Positive, &R::prop,
                            &PropagationConfig::symbol_period_s));
    s.push_back(member_real("sim.max_wait_s", Tag::Chosen, "per-molecule arrival cutoff", C::Positive, &R::prop,
                            &PropagationConfig::max_wait_s));
    s.push_back(count("sim.bits", Tag::Chosen, "random bits sent", C::AtLeastOne, &R::sim_bits));
    s.push_back(count("seed", Tag::Chosen, "", C::Any, &R::seed));

    s.push_back(text("out.csv", "empty: stdout", &R::out_csv));
    s.push_back(text("out.svg", "empty: <out.csv>.svg when --svg", &R::out_svg));
    s.push_back(text("out.trace_csv", "empty: no trace", &R::out_trace_csv));
    return s;
  }();
  return entries;
}

inline const Entry* find_entry(std::string_view key) {
  for (const Entry& e : schema()) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

inline const Entry& require_entry(const std::string& key) {
  const Entry* e = find_entry(key);
  if (!e) throw ConfigError(key, "unknown config key: " + key);
  return *e;
}

inline void set_value(RunConfig& cfg, const std::string& key, std::string_view value) {
  const Entry& e = require_entry(key);
  if (value.empty() && e.kind != Kind::Text) throw ConfigError(key, key + ": missing value");
  e.set(cfg, value);
}

// `key = value` assignment as given on the command line.
inline void apply_assignment(RunConfig& cfg, std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) {
    const std::string key(trim(line));
    throw ConfigError(key, "expected key = value, got '" + std::string(line) + "'");
  }
  set_value(cfg, std::string(trim(line.substr(0, eq))), trim(line.substr(eq + 1)));
}

inline void parse_into(RunConfig& cfg, std::istream& in, const std::string& source = "config") {
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v(line);
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    const std::string key(trim(v.substr(0, eq)));
    if (eq == std::string_view::npos) {
      throw ConfigError(key, source + ":" + std::to_string(lineno) + ": expected key = value");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(key, source + ":" + std::to_string(lineno) + ": duplicate key " + key);
    }
    set_value(cfg, key, trim(v.substr(eq + 1)));
  }
}

inline RunConfig parse(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  parse_into(cfg, in);
  return cfg;
}

inline RunConfig load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot read config file " + path);
  RunConfig cfg;
  parse_into(cfg, in, path);
  return cfg;
}

// ------------------------------------------------------------------ conversion

inline molecular::LogMode log_mode(const RunConfig& c) {
  return c.mode == "nats" ? molecular::LogMode::NatsConsistent : molecular::LogMode::Verbatim;
}

inline thz::PathLossModel path_loss_model(const RunConfig& c) {
  if (c.thz_absorption_per_m > 0.0) return thz::FreeSpaceWithAbsorption{c.thz_absorption_per_m};
  return thz::FreeSpace{};
}

inline thz::SimplifiedThzParams simplified_thz(const RunConfig& c) {
  return {c.thz_bandwidth_hz, c.thz_snr_linear, c.thz_center_freq_hz, c.thz_distance_m, path_loss_model(c)};
}

inline ThzParams thz_params(const RunConfig& c) {
  if (c.thz_model == "simplified") return simplified_thz(c);
  auto req = [](const std::optional<double>& v, const char* key) {
    if (!v) throw ConfigError(key, std::string("missing required key ") + key + " (thz.model = subband)");
    return *v;
  };
  thz::ThzChannelParams p;
  p.f_low_hz = req(c.thz_f_low_hz, "thz.f_low_hz");
  p.f_high_hz = req(c.thz_f_high_hz, "thz.f_high_hz");
  p.delta_f_hz = req(c.thz_delta_f_hz, "thz.delta_f_hz");
  p.tx_psd_w_per_hz = req(c.thz_tx_psd_w_per_hz, "thz.tx_psd_w_per_hz");
  p.noise_psd_w_per_hz = req(c.thz_noise_psd_w_per_hz, "thz.noise_psd_w_per_hz");
  p.distance_m = c.thz_distance_m;
  p.path_loss = path_loss_model(c);
  return p;
}

inline molecular::IntervalPolicy interval_policy(const RunConfig& c) {
  return c.mol_tau_mode == "fixed" ? molecular::IntervalPolicy::fixed(c.mol_tau_s)
                                   : molecular::IntervalPolicy::per_bandwidth(c.mol_tau_factor);
}

inline molecular::MolecularChannelParams molecular_params(const RunConfig& c) {
  molecular::MolecularChannelParams p{c.mol_bandwidth_hz, c.mol_mean_power_w, c.mol_temperature_k,
                                      c.mol_diffusion_m2_per_s, c.mol_distance_m, c.mol_detector_radius_m, 0.0};
  p.interval_s = interval_policy(c).interval_for(c.mol_bandwidth_hz);
  return p;
}

inline neural::NeuralChannelParams neural_params(const RunConfig& c) {
  return {c.neu_input_rate_pps, c.neu_refractory_s, c.neu_latency_sigma_s};
}

inline std::vector<double> grid_points(const Grid& g, const std::string& name) {
  if (g.points < 2) throw ConfigError(name + ".points", name + ".points: must be >= 2");
  if (!(g.to > g.from)) throw ConfigError(name + ".to", name + ": grid end must exceed grid start");
  if (g.spacing == Spacing::Log && !(g.from > 0.0)) {
    throw ConfigError(name + ".from", name + ": log spacing needs a positive start");
  }
  std::vector<double> x(g.points);
  const double n = static_cast<double>(g.points - 1);
  for (std::uint64_t i = 0; i < g.points; ++i) {
    const double t = static_cast<double>(i) / n;
    x[i] = g.spacing == Spacing::Log ? std::exp(std::log(g.from) + t * (std::log(g.to) - std::log(g.from)))
                                     : g.from + t * (g.to - g.from);
  }
  x.front() = g.from;
  x.back() = g.to;
  return x;
}

// ------------------------------------------------------------------ echo

inline bool is_output_key(const std::string& key) { return key.rfind("out.", 0) == 0; }

/// One line per key with its tag and note; unset optional keys are echoed
/// commented out.
inline std::string render(const RunConfig& cfg) {
  const RunConfig defaults;
  std::string out = "# hnc run configuration\n# tags: reported = stated with the source model, "
                    "calibrated = fitted, chosen = our default\n";
  for (const Entry& e : schema()) {
    const std::string value = e.get(cfg);
    std::string comment = tag_name(e.tag);
    if (value != e.get(defaults)) {
      comment += "; set, default " + (e.get(defaults).empty() ? std::string("unset") : e.get(defaults));
    }
    if (!e.note.empty()) comment += "; " + e.note;
    if (e.optional && value.empty()) {
      out += "# " + e.key + " =   # " + comment + "\n";
    } else {
      out += e.key + " = " + value + "   # " + comment + "\n";
    }
  }
  return out;
}

/// Single-line form for CSV provenance; output paths are left out so the
/// data file does not depend on where it is written.
inline std::string provenance_line(const RunConfig& cfg) {
  std::string out = "# config:";
  for (const Entry& e : schema()) {
    if (is_output_key(e.key)) continue;
    const std::string v = e.get(cfg);
    if (e.optional && v.empty()) continue;
    out += " " + e.key + "=" + v;
  }
  return out;
}

}  // namespace hnc::config
