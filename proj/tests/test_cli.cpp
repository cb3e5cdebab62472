#include <gtest/gtest.h>

#include <sstream>

#include "cli_harness.hpp"
#include "link_fixtures.hpp"
#include "hnc/cli.hpp"

using harness::run_cli;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::vector<double>> numeric_rows(const std::string& csv, std::vector<std::string>* header = nullptr) {
  std::vector<std::vector<double>> rows;
  bool seen_header = false;
  for (const auto& l : lines(csv)) {
    if (l.empty() || l[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(l);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    if (!seen_header) {
      seen_header = true;
      if (header) *header = cells;
      continue;
    }
    std::vector<double> v;
    for (const auto& c : cells) v.push_back(std::stod(c));
    rows.push_back(v);
  }
  return rows;
}

int in_process(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
  args.insert(args.begin(), "hnc_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = hnc::cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

}  // namespace

TEST(Cli, HelpListsEverything) {
  const auto r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  for (const char* s : {"capacity", "reproduce", "sweep", "simulate", "print-config", "--config", "--out", "--svg",
                        "--seed", "--mode", "--print-config", "--set"}) {
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  }
  EXPECT_EQ(run_cli("reproduce --help").exit_code, 0);
}

TEST(Cli, NoSubcommandIsUsageError) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("--bogus capacity").exit_code, 2);
  EXPECT_EQ(run_cli("reproduce fig11").exit_code, 2);
  EXPECT_EQ(run_cli("--mode loud capacity").exit_code, 2);
  EXPECT_EQ(run_cli("--config /nonexistent/x.conf capacity").exit_code, 2);
}

TEST(Cli, DefaultCapacityReport) {
  const auto r = run_cli("capacity");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* k : {"c1_thz_bps = ", "c2_molecular_bps = ", "c3_neural_bps = ", "cascade_bps = ",
                        "bottleneck = ", "negative = none"}) {
    EXPECT_NE(r.out.find(k), std::string::npos) << k;
  }
  EXPECT_EQ(r.out.find("inf"), std::string::npos);
  EXPECT_EQ(r.out.find("nan"), std::string::npos);
}

TEST(Cli, CapacityMatchesLibrary) {
  std::string out;
  ASSERT_EQ(in_process({"capacity"}, &out), 0);
  const hnc::config::RunConfig cfg;
  const auto r = hnc::full_report(hnc::config::thz_params(cfg), hnc::config::molecular_params(cfg),
                                  hnc::config::neural_params(cfg));
  EXPECT_NE(out.find("cascade_bps = " + hnc::config::format_double(r.cascade_bps) + "\n"), std::string::npos);
  EXPECT_NE(out.find(std::string("bottleneck = ") + hnc::channel_name(r.bottleneck)), std::string::npos);
}

TEST(Cli, MissingRequiredThzKey) {
  const auto cfg = harness::write_config("sub.conf",
                                         "thz.model = subband\nthz.f_low_hz = 1e11\nthz.f_high_hz = 1.1e12\n"
                                         "thz.delta_f_hz = 1e11\nthz.tx_psd_w_per_hz = 1e-10\n");
  const auto r = run_cli("--config '" + cfg.string() + "' capacity");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("thz.noise_psd_w_per_hz"), std::string::npos) << r.err;
  const auto ok = run_cli("--config '" + harness::config_path("thz_subband.conf") + "' capacity");
  EXPECT_EQ(ok.exit_code, 0) << ok.err;
}

TEST(Cli, UnknownKeyNamed) {
  const auto cfg = harness::write_config("unk.conf", "mol.bandwidth_hz = 20\nneu.rate = 3\n");
  const auto r = run_cli("--config '" + cfg.string() + "' capacity");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("neu.rate"), std::string::npos);
  const auto s = run_cli("--set neu.latency=1 capacity");
  EXPECT_EQ(s.exit_code, 2);
  EXPECT_NE(s.err.find("neu.latency"), std::string::npos);
}

TEST(Cli, DomainErrorNamesChannel) {
  const auto r = run_cli("--set mol.bandwidth_hz=1e-6 capacity");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("molecular"), std::string::npos) << r.err;
  const auto f = run_cli("--set fig9.from_hz=1e-6 reproduce fig9");
  EXPECT_EQ(f.exit_code, 3);
  EXPECT_NE(f.err.find("molecular"), std::string::npos);
}

TEST(Cli, InvalidModelParameterIsConfigError) {
  EXPECT_EQ(run_cli("--set sim.detector_radius_m=3e-6 simulate").exit_code, 2);
}

TEST(Cli, PrintConfigEchoStable) {
  const auto a = run_cli("print-config");
  const auto b = run_cli("--print-config");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run_cli("print-config").out);
  EXPECT_EQ(a.out, hnc::config::render(hnc::config::RunConfig{}));
  for (const auto& e : hnc::config::schema()) EXPECT_NE(a.out.find(e.key + " ="), std::string::npos) << e.key;

  // echoed config reloads to the same echo
  const auto set = run_cli("--set mol.detector_radius_m=2e-7 --mode nats --seed 9 print-config");
  const auto path = harness::write_config("echo.conf", set.out);
  const auto again = run_cli("--config '" + path.string() + "' print-config");
  EXPECT_EQ(again.exit_code, 0) << again.err;
  EXPECT_EQ(again.out, set.out);
  EXPECT_NE(set.out.find("seed = 9"), std::string::npos);
  EXPECT_NE(set.out.find("mode = nats"), std::string::npos);
}

TEST(Cli, ReproduceCsvHeadersAndShape) {
  struct Case {
    const char* fig;
    std::vector<std::string> header;
    int sign;  // +1 increasing, -1 decreasing, 0 no check
  };
  for (const Case& c : {Case{"fig8", {"distance_m", "capacity_bps"}, -1}, Case{"fig9", {"bandwidth_hz", "capacity_bps"}, 0},
                        Case{"fig10", {"rate_pps", "capacity_nats_ps", "capacity_bps"}, +1}}) {
    const auto r = run_cli(std::string("reproduce ") + c.fig);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 3u);
    EXPECT_EQ(ls[0].rfind("# config:", 0), 0u);
    int comments = 0;
    for (const auto& l : ls) comments += !l.empty() && l[0] == '#';
    EXPECT_EQ(comments, 1);
    std::vector<std::string> header;
    const auto rows = numeric_rows(r.out, &header);
    EXPECT_EQ(header, c.header);
    for (std::size_t i = 1; c.sign != 0 && i < rows.size(); ++i) {
      if (c.sign < 0) {
        EXPECT_LT(rows[i].back(), rows[i - 1].back()) << c.fig << " row " << i;
      } else {
        EXPECT_GT(rows[i].back(), rows[i - 1].back()) << c.fig << " row " << i;
      }
    }
    EXPECT_EQ(r.out, run_cli(std::string("reproduce ") + c.fig).out);
  }
}

TEST(Cli, CsvFileByteStableAcrossPaths) {
  const auto p1 = harness::scratch_dir() / "a.csv", p2 = harness::scratch_dir() / "b.csv";
  ASSERT_EQ(run_cli("reproduce fig9 --out '" + p1.string() + "'").exit_code, 0);
  ASSERT_EQ(run_cli("--out '" + p2.string() + "' reproduce fig9").exit_code, 0);
  EXPECT_EQ(harness::slurp(p1), harness::slurp(p2));
  EXPECT_EQ(harness::slurp(p1), run_cli("reproduce fig9").out);
}

TEST(Cli, SvgNextToCsv) {
  const auto p = harness::scratch_dir() / "f8.csv";
  const auto r = run_cli("--config '" + harness::config_path("fig8_absorption.conf") + "' reproduce fig8 --svg --out '" +
                         p.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string svg = harness::slurp(harness::scratch_dir() / "f8.svg");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("(log)"), std::string::npos);
  EXPECT_EQ(run_cli("reproduce fig8 --svg").exit_code, 2);
}

TEST(Cli, SweepColumns) {
  const auto r = run_cli("--set sweep.param=neu.input_rate_pps --set sweep.spacing=linear --set sweep.from=0 "
                         "--set sweep.to=100 --set sweep.points=5 sweep");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[1], "neu.input_rate_pps,c1_thz_bps,c2_molecular_bps,c3_neural_bps,c3_neural_nats_ps,cascade_bps,bottleneck");
  EXPECT_EQ(ls[2].rfind("0,", 0), 0u);
  EXPECT_EQ(run_cli("--set sweep.param=sim.bits sweep").exit_code, 2);
  EXPECT_EQ(run_cli("--set sweep.param=mol.tau_mode sweep").exit_code, 2);
}

TEST(Cli, SimulateIdealPrintsExactZero) {
  const auto r = run_cli("--config '" + harness::config_path("sim_ideal.conf") + "' simulate");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("ber = 0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("trials = 1000\n"), std::string::npos);
  EXPECT_NE(r.out.find("seed = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("throughput_bps = 1\n"), std::string::npos);
}

TEST(Cli, SimulateDeterministicTrace) {
  const auto t1 = harness::scratch_dir() / "t1.csv", t2 = harness::scratch_dir() / "t2.csv";
  const auto a = run_cli("simulate --seed 5 --out '" + t1.string() + "'");
  const auto b = run_cli("--seed 5 simulate --out '" + t2.string() + "'");
  ASSERT_EQ(a.exit_code, 0) << a.err;
  EXPECT_EQ(harness::slurp(t1), harness::slurp(t2));
  const auto ls = lines(harness::slurp(t1));
  ASSERT_GE(ls.size(), 3u);
  EXPECT_EQ(ls[0].rfind("# config:", 0), 0u);
  EXPECT_EQ(ls[1], "time_s,event_kind,payload");
  const auto c = run_cli("simulate --seed 6");
  EXPECT_NE(c.out.find("seed = 6"), std::string::npos);
}

TEST(Cli, SimulateInconsistencyExit4) {
  const auto r = run_cli("--set sim.t2m_charge_threshold=3 --set sim.t2m_pulses_per_one=2 simulate");
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_NE(r.err.find("threshold"), std::string::npos);
}

TEST(Cli, SimulateDefaultWithinOracleBand) {
  const auto r = run_cli("--set sim.bits=10000 simulate --seed 12");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto pos = r.out.find("ber = ");
  ASSERT_NE(pos, std::string::npos);
  const double ber = std::stod(r.out.substr(pos + 6));
  const hnc::config::RunConfig cfg;
  const auto bits = hnc::link::random_bits(10000, 12);
  const double ones = static_cast<double>(std::count(bits.begin(), bits.end(), 1));
  const double pe = fixtures::chain_for(cfg.relay, cfg.prop).p_error_given_one();
  const double expect = ones * pe / 10000.0, sigma = std::sqrt(ones * pe * (1 - pe)) / 10000.0;
  EXPECT_LE(std::fabs(ber - expect), 3 * sigma) << ber << " vs " << expect;
}
