#pragma once

// Command-line front end. run() is the whole program; main() only forwards
// argv and the standard streams so tests can drive it in-process.
//
// exit codes: 0 ok, 2 configuration error, 3 numeric domain error,
// 4 link simulation inconsistency

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hnc/config.hpp"
#include "hnc/errors.hpp"
#include "hnc/hybrid.hpp"
#include "hnc/link_sim.hpp"
#include "hnc/svg_plot.hpp"

namespace hnc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitSimulation = 4;

using config::format_double;
using config::RunConfig;

// A CSV table: header names carry unit suffixes.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string to_csv(const Table& t, const RunConfig& cfg) {
  std::string out = config::provenance_line(cfg) + "\n";
  for (std::size_t i = 0; i < t.header.size(); ++i) out += (i ? "," : "") + t.header[i];
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& data, const char* key) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError(key, std::string(key) + ": cannot open " + path + " for writing");
  f << data;
  if (!f) throw ConfigError(key, std::string(key) + ": write to " + path + " failed");
}

inline std::string svg_path(const RunConfig& cfg) {
  if (!cfg.out_svg.empty()) return cfg.out_svg;
  if (cfg.out_csv.empty()) throw ConfigError("out.svg", "--svg needs --out or out.svg");
  std::string p = cfg.out_csv;
  const auto dot = p.find_last_of('.');
  const auto slash = p.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) p.erase(dot);
  return p + ".svg";
}

inline void emit(const Table& t, const RunConfig& cfg, std::ostream& out) {
  const std::string csv = to_csv(t, cfg);
  if (cfg.out_csv.empty()) {
    out << csv;
  } else {
    write_file(cfg.out_csv, csv, "out.csv");
    out << "wrote " << cfg.out_csv << "\n";
  }
}

inline void emit_svg(const svg::Chart& chart, const RunConfig& cfg, std::ostream& out) {
  const std::string path = svg_path(cfg);
  write_file(path, svg::render(chart), "out.svg");
  out << "wrote " << path << "\n";
}

// ------------------------------------------------------------------ capacity

inline void cmd_capacity(const RunConfig& cfg, std::ostream& out) {
  const auto thz = config::thz_params(cfg);
  const auto mol = config::molecular_params(cfg);
  const auto neu = config::neural_params(cfg);
  const auto mode = config::log_mode(cfg);
  const CapacityReport r = full_report(thz, mol, neu, mode);
  const auto terms = detail::labelled(Channel::Molecular, [&] { return molecular::capacity_molecular(mol, mode); });

  std::string negative;
  for (auto [flag, name] : {std::pair{r.thz_negative, "thz"}, std::pair{r.molecular_negative, "molecular"},
                            std::pair{r.neural_negative, "neural"}}) {
    if (flag) negative += (negative.empty() ? "" : ",") + std::string(name);
  }
  out << "c1_thz_bps = " << format_double(r.c1_thz_bps) << "\n"
      << "c2_molecular_bps = " << format_double(r.c2_molecular_bps) << "\n"
      << "c3_neural_bps = " << format_double(r.c3_neural_bps) << "\n"
      << "c3_neural_nats_ps = " << format_double(r.c3_neural_nats_ps) << "\n"
      << "cascade_bps = " << format_double(r.cascade_bps) << "\n"
      << "bottleneck = " << channel_name(r.bottleneck) << "\n"
      << "negative = " << (negative.empty() ? "none" : negative) << "\n"
      << "mode = " << cfg.mode << "\n"
      << "mol.gamma_argument = " << format_double(terms.gamma_argument) << "\n"
      << "mol.interval_s = " << format_double(mol.interval_s) << "\n";
  for (std::size_t i = 0; i < molecular::kTermCount; ++i) {
    out << "mol.term." << molecular::kTermNames[i] << " = " << format_double(terms.terms[i]) << "\n";
  }

  if (!cfg.out_csv.empty()) {
    Table t{{"c1_thz_bps", "c2_molecular_bps", "c3_neural_bps", "c3_neural_nats_ps", "cascade_bps", "bottleneck"},
            {{format_double(r.c1_thz_bps), format_double(r.c2_molecular_bps), format_double(r.c3_neural_bps),
              format_double(r.c3_neural_nats_ps), format_double(r.cascade_bps), channel_name(r.bottleneck)}}};
    emit(t, cfg, out);
  }
}

// ------------------------------------------------------------------ reproduce

enum class Figure { Fig8, Fig9, Fig10 };

inline Table figure_table(Figure fig, const RunConfig& cfg, svg::Chart* chart = nullptr) {
  Table t;
  if (fig == Figure::Fig8) {
    const auto grid = config::grid_points(cfg.fig8, "fig8");
    t.header = {"distance_m", "capacity_bps"};
    std::vector<double> y;
    for (double d : grid) {
      auto p = config::simplified_thz(cfg);
      p.distance_m = d;
      const double c = detail::labelled(Channel::Thz, [&] { return thz::capacity_simplified(p); });
      y.push_back(c);
      t.rows.push_back({format_double(d), format_double(c)});
    }
    if (chart) *chart = {"THz sub-channel capacity", "distance (m)", "capacity (bit/s)", grid,
                         {{"C1", y}}, true, svg::wants_log(y)};
  } else if (fig == Figure::Fig9) {
    const auto grid = config::grid_points(cfg.fig9, "fig9");
    t.header = {"bandwidth_hz", "capacity_bps"};
    const auto curve = detail::labelled(Channel::Molecular, [&] {
      return molecular::sweep_bandwidth(config::molecular_params(cfg), grid, config::log_mode(cfg),
                                        config::interval_policy(cfg));
    });
    std::vector<double> y;
    for (const auto& pt : curve) {
      y.push_back(pt.capacity.bits_per_s);
      t.rows.push_back({format_double(pt.bandwidth_hz), format_double(pt.capacity.bits_per_s)});
    }
    if (chart) *chart = {"Molecular sub-channel capacity", "bandwidth (Hz)", "capacity (bit/s)", grid,
                         {{"C2", y}}, true, svg::wants_log(y)};
  } else {
    const auto grid = config::grid_points(cfg.fig10, "fig10");
    t.header = {"rate_pps", "capacity_nats_ps", "capacity_bps"};
    const auto curve = detail::labelled(
        Channel::Neural, [&] { return neural::sweep_input_rate(config::neural_params(cfg), grid); });
    std::vector<double> y;
    for (const auto& pt : curve) {
      y.push_back(pt.capacity.bits_per_s);
      t.rows.push_back({format_double(pt.rate_pps), format_double(pt.capacity.nats_per_s),
                        format_double(pt.capacity.bits_per_s)});
    }
    if (chart) *chart = {"Neural sub-channel capacity", "input rate (pulses/s)", "capacity (bit/s)", grid,
                         {{"C3", y}}, false, false};
  }
  return t;
}

inline void cmd_reproduce(Figure fig, const RunConfig& cfg, bool want_svg, std::ostream& out) {
  svg::Chart chart;
  const Table t = figure_table(fig, cfg, &chart);
  if (want_svg) svg_path(cfg);  // fail before writing anything
  emit(t, cfg, out);
  if (want_svg) emit_svg(chart, cfg, out);
}

// ------------------------------------------------------------------ sweep

inline const config::Entry& sweep_entry(const RunConfig& cfg) {
  const config::Entry* e = config::find_entry(cfg.sweep_param);
  const bool model_key = cfg.sweep_param.rfind("thz.", 0) == 0 || cfg.sweep_param.rfind("mol.", 0) == 0 ||
                         cfg.sweep_param.rfind("neu.", 0) == 0;
  if (!e || !model_key || e->kind != config::Kind::Real || !e->set_real) {
    throw ConfigError("sweep.param", "sweep.param: '" + cfg.sweep_param +
                                         "' is not a numeric thz./mol./neu. key");
  }
  return *e;
}

inline void cmd_sweep(const RunConfig& cfg, bool want_svg, std::ostream& out) {
  const config::Entry& entry = sweep_entry(cfg);
  const auto grid = config::grid_points(cfg.sweep, "sweep");
  Table t;
  t.header = {cfg.sweep_param, "c1_thz_bps", "c2_molecular_bps", "c3_neural_bps", "c3_neural_nats_ps",
              "cascade_bps", "bottleneck"};
  std::vector<svg::Series> series = {{"C1 thz", {}}, {"C2 molecular", {}}, {"C3 neural", {}}, {"cascade", {}}};
  for (double v : grid) {
    RunConfig c = cfg;
    entry.set_real(c, v);
    const CapacityReport r =
        full_report(config::thz_params(c), config::molecular_params(c), config::neural_params(c),
                    config::log_mode(c));
    t.rows.push_back({format_double(v), format_double(r.c1_thz_bps), format_double(r.c2_molecular_bps),
                      format_double(r.c3_neural_bps), format_double(r.c3_neural_nats_ps),
                      format_double(r.cascade_bps), channel_name(r.bottleneck)});
    series[0].y.push_back(r.c1_thz_bps);
    series[1].y.push_back(r.c2_molecular_bps);
    series[2].y.push_back(r.c3_neural_bps);
    series[3].y.push_back(r.cascade_bps);
  }
  if (want_svg) svg_path(cfg);
  emit(t, cfg, out);
  if (want_svg) {
    std::vector<double> all;
    for (const auto& s : series) all.insert(all.end(), s.y.begin(), s.y.end());
    const svg::Chart chart{"Sub-channel capacities", cfg.sweep_param, "capacity (bit/s)", grid, series,
                           cfg.sweep.spacing == config::Spacing::Log, svg::wants_log(all)};
    emit_svg(chart, cfg, out);
  }
}

// ------------------------------------------------------------------ simulate

inline void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const link::Bits bits = link::random_bits(cfg.sim_bits, cfg.seed);
  const auto [res, trace] = link::run_link(bits, cfg.relay, cfg.prop, cfg.seed);
  out << "ber = " << format_double(res.ber) << "\n"
      << "throughput_bps = " << format_double(res.throughput_bps) << "\n"
      << "trials = " << res.trials << "\n"
      << "bit_errors = " << res.bit_errors << "\n"
      << "seed = " << res.seed << "\n";
  const std::string path = cfg.out_trace_csv.empty() ? cfg.out_csv : cfg.out_trace_csv;
  if (!path.empty()) {
    write_file(path, config::provenance_line(cfg) + "\n" + link::trace_csv(trace), "out.trace_csv");
    out << "wrote " << path << "\n";
  }
}

// ------------------------------------------------------------------ entry

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid nano-network channel capacities, figure sweeps and link simulation", "hnc_cli"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_path, out_path, mode;
  std::vector<std::string> assignments;
  std::uint64_t seed = 0;
  bool want_svg = false, print_config_flag = false;
  app.add_option("--config", config_path, "config file of key = value lines")->check(CLI::ExistingFile);
  app.add_option("--set", assignments, "override one key, as key=value (repeatable)")
      ->allow_extra_args(false);
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed for simulate (overrides seed)");
  app.add_option("--out", out_path, "output path: CSV, or trace CSV for simulate (overrides out.csv)");
  app.add_flag("--svg", want_svg, "also write an SVG chart next to the CSV");
  app.add_option("--mode", mode, "molecular log handling (overrides mode)")
      ->check(CLI::IsMember({"verbatim", "nats"}));
  app.add_flag("--print-config", print_config_flag, "echo the effective configuration and exit");

  auto* capacity = app.add_subcommand("capacity", "C1, C2, C3, cascade capacity and bottleneck");
  auto* reproduce = app.add_subcommand("reproduce", "figure sweep as CSV (fig8 | fig9 | fig10)");
  std::string figure;
  reproduce->add_option("figure", figure, "fig8 | fig9 | fig10")
      ->required()
      ->check(CLI::IsMember({"fig8", "fig9", "fig10"}));
  auto* sweep = app.add_subcommand("sweep", "sweep one model key (sweep.*) and report every capacity");
  auto* simulate = app.add_subcommand("simulate", "end-to-end link simulation of sim.bits random bits");
  auto* print_config = app.add_subcommand("print-config", "echo the effective configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : config::load_file(config_path);
    for (const auto& a : assignments) config::apply_assignment(cfg, a);
    if (*seed_opt) cfg.seed = seed;
    if (!mode.empty()) cfg.mode = mode;
    if (!out_path.empty()) cfg.out_csv = out_path;

    if (print_config_flag || print_config->parsed()) {
      out << config::render(cfg);
    } else if (capacity->parsed()) {
      cmd_capacity(cfg, out);
    } else if (reproduce->parsed()) {
      const Figure fig = figure == "fig8" ? Figure::Fig8 : figure == "fig9" ? Figure::Fig9 : Figure::Fig10;
      cmd_reproduce(fig, cfg, want_svg, out);
    } else if (sweep->parsed()) {
      cmd_sweep(cfg, want_svg, out);
    } else if (simulate->parsed()) {
      cmd_simulate(cfg, out);
    } else {
      err << app.help();
      return kExitConfig;
    }
  } catch (const ConfigError& e) {
    err << "config error [" << e.key() << "]: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ChannelError& e) {
    if (e.kind() == ChannelError::Kind::Domain) {
      err << "numeric domain error: " << e.what() << "\n";
      return kExitDomain;
    }
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SimulationInconsistency& e) {
    err << "simulation inconsistency: " << e.what() << "\n";
    return kExitSimulation;
  } catch (const DomainError& e) {
    err << "numeric domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InvalidParameter& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace hnc::cli
