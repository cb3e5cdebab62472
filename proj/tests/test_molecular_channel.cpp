#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hnc/molecular_channel.hpp"
#include "oracles/mp_oracles.hpp"

using namespace hnc::molecular;

namespace {

MolecularChannelParams reported_params(double w = 10.0) {
  MolecularChannelParams p;
  p.bandwidth_hz = w;
  p.mean_power_w = 1e-12;
  p.temperature_k = 300.0;
  p.diffusion_m2_s = 1e-9;
  p.distance_m = 1e-4;
  p.detector_radius_m = 1e-5;
  p.interval_s = 0.5 / w;
  return p;
}

oracle::Real oracle_total(const MolecularChannelParams& p) {
  oracle::Real s = 0;
  for (const auto& t : oracle::molecular_terms(p.bandwidth_hz, p.mean_power_w, p.temperature_k,
                                               p.diffusion_m2_s, p.distance_m, p.detector_radius_m,
                                               p.interval_s)) {
    s += t;
  }
  return s;
}

}  // namespace

TEST(GammaArgument, ConstructedUnitCase) {
  MolecularChannelParams p = reported_params(1.0);
  p.mean_power_w = 9.0 * kBoltzmann * p.temperature_k * p.distance_m / (2.0 * p.detector_radius_m);
  EXPECT_NEAR(gamma_argument(p), 1.0, 1e-15);
}

TEST(GammaArgument, InverseSquareInBandwidth) {
  MolecularChannelParams p = reported_params(7.0);
  const double x = gamma_argument(p);
  p.bandwidth_hz *= 2.0;
  EXPECT_DOUBLE_EQ(gamma_argument(p), x / 4.0);
}

TEST(GammaArgument, ReportedParametersMatchOracle) {
  const MolecularChannelParams p = reported_params(10.0);
  const auto ref = oracle::molecular_argument(10.0, 1e-12, 300.0, 1e-4, 1e-5);
  EXPECT_LE(oracle::rel_err(gamma_argument(p), ref), 1e-15);
}

TEST(GammaArgument, Overflow) {
  MolecularChannelParams p = reported_params(1.0);
  p.mean_power_w = 1e300;
  p.detector_radius_m = 1e300;
  EXPECT_THROW(gamma_argument(p), hnc::DomainError);
}

TEST(CapacityMolecular, MatchesTermwiseOracle) {
  for (double w : {1.0, 3.0, 10.0, 20.0, 55.0, 200.0}) {
    const MolecularChannelParams p = reported_params(w);
    const auto got = capacity_molecular(p);
    EXPECT_LE(oracle::rel_err(got.bits_per_s, oracle_total(p)), 1e-12) << w;
    const auto terms = oracle::molecular_terms(p.bandwidth_hz, p.mean_power_w, p.temperature_k,
                                               p.diffusion_m2_s, p.distance_m,
                                               p.detector_radius_m, p.interval_s);
    for (std::size_t i = 0; i < kTermCount; ++i) {
      EXPECT_LE(oracle::rel_err(got.terms[i], terms[i]), 1e-13) << kTermNames[i] << " W=" << w;
    }
  }
}

TEST(CapacityMolecular, UnitArgumentKillsSpecialFunctionTerms) {
  MolecularChannelParams p = reported_params(4.0);
  p.mean_power_w = 9.0 * kBoltzmann * p.temperature_k * p.distance_m * 16.0 / (2.0 * p.detector_radius_m);
  const auto c = capacity_molecular(p);
  ASSERT_NEAR(c.gamma_argument, 1.0, 1e-15);
  EXPECT_NEAR(c.terms[kLnGammaTerm], 0.0, 1e-13);
  EXPECT_NEAR(c.terms[kDigammaTerm], 0.0, 1e-13);
  const double w = 4.0;
  const double hand = 2 * w * (1 + std::log2(p.mean_power_w / (3 * w * kBoltzmann * 300.0))) -
                      2 * std::log2(std::numbers::pi * 1e-9 * 1e-4) -
                      (4 * 1e-4 / (3 * std::numbers::ln2)) * std::sqrt(std::numbers::pi * w / 1e-9) +
                      2 * w * 1.0 - 2 * w * std::log(w * p.interval_s);
  EXPECT_NEAR(c.bits_per_s, hand, 1e-10 * std::fabs(hand));
}

TEST(CapacityMolecular, ModesAgreeWhenNaturalLogTermsVanish) {
  MolecularChannelParams p = reported_params(4.0);
  p.interval_s = 1.0 / p.bandwidth_hz;
  p.mean_power_w = 9.0 * kBoltzmann * p.temperature_k * p.distance_m * 16.0 / (2.0 * p.detector_radius_m);
  const double v = capacity_molecular(p, LogMode::Verbatim).bits_per_s;
  const double n = capacity_molecular(p, LogMode::NatsConsistent).bits_per_s;
  EXPECT_NEAR(v, n, 1e-12 * std::fabs(v));
}

TEST(CapacityMolecular, NatsModeScalesNaturalLogTerms) {
  const MolecularChannelParams p = reported_params(30.0);
  const auto v = capacity_molecular(p, LogMode::Verbatim);
  const auto n = capacity_molecular(p, LogMode::NatsConsistent);
  for (Term t : {kIntervalTerm, kLnGammaTerm, kDigammaTerm}) {
    EXPECT_DOUBLE_EQ(n.terms[t], v.terms[t] / std::numbers::ln2);
  }
  for (Term t : {kPowerTerm, kSpreadTerm, kDelayTerm, kArgumentTerm}) {
    EXPECT_EQ(n.terms[t], v.terms[t]);
  }
}

TEST(CapacityMolecular, DoublingPowerShiftsComponents) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> lw(0, 2.3);
  for (int i = 0; i < 50; ++i) {
    const double w = std::pow(10.0, lw(rng));
    MolecularChannelParams p = reported_params(w);
    const auto a = capacity_molecular(p);
    p.mean_power_w *= 2.0;
    const auto b = capacity_molecular(p);
    EXPECT_NEAR(b.terms[kPowerTerm] - a.terms[kPowerTerm], 2.0 * w, 1e-9 * std::fabs(a.terms[kPowerTerm]));
    EXPECT_DOUBLE_EQ(b.gamma_argument, 2.0 * a.gamma_argument);
  }
}

TEST(CapacityMolecular, DistanceTermsDecrease) {
  MolecularChannelParams p = reported_params(20.0);
  auto prev = capacity_molecular(p);
  for (int i = 0; i < 40; ++i) {
    p.distance_m *= 1.1;
    const auto cur = capacity_molecular(p);
    ASSERT_LT(cur.terms[kSpreadTerm], prev.terms[kSpreadTerm]);
    ASSERT_LT(cur.terms[kDelayTerm], prev.terms[kDelayTerm]);
    prev = cur;
  }
}

TEST(CapacityMolecular, NegativeValueIsFlaggedNotClamped) {
  MolecularChannelParams p = reported_params(50.0);
  p.distance_m = 1.0;  // delay term dominates
  p.detector_radius_m = 1e-2;
  const auto c = capacity_molecular(p);
  EXPECT_LT(c.bits_per_s, 0.0);
  EXPECT_TRUE(c.negative);
}

TEST(CapacityMolecular, ArgumentOutsideValidatedRange) {
  MolecularChannelParams p = reported_params(1e-3);
  p.interval_s = 1.0;
  EXPECT_GT(gamma_argument(p), hnc::specfun::kValidatedMax);
  EXPECT_THROW(capacity_molecular(p), hnc::DomainError);
}

TEST(CapacityMolecular, InvalidParameters) {
  MolecularChannelParams p = reported_params();
  p.diffusion_m2_s = 0.0;
  EXPECT_THROW(capacity_molecular(p), hnc::InvalidParameter);
  p = reported_params();
  p.interval_s = -1.0;
  EXPECT_THROW(capacity_molecular(p), hnc::InvalidParameter);
}

TEST(SweepBandwidth, MapSemantics) {
  const MolecularChannelParams base = reported_params(10.0);
  const auto one = sweep_bandwidth(base, {10.0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].capacity.bits_per_s, capacity_molecular(base).bits_per_s);

  const std::vector<double> grid = {2.0, 17.0, 90.0};
  const auto three = sweep_bandwidth(base, grid, LogMode::Verbatim, IntervalPolicy::per_bandwidth(0.5));
  ASSERT_EQ(three.size(), 3u);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(three[i].bandwidth_hz, grid[i]);
    EXPECT_EQ(three[i].capacity.bits_per_s, capacity_molecular(reported_params(grid[i])).bits_per_s);
  }
}

TEST(SweepBandwidth, ErrorsCarryBandwidth) {
  const MolecularChannelParams base = reported_params(10.0);
  EXPECT_THROW(sweep_bandwidth(base, {}), hnc::InvalidParameter);
  EXPECT_THROW(sweep_bandwidth(base, {3.0, 2.0}), hnc::InvalidParameter);
  try {
    sweep_bandwidth(base, {1e-4, 10.0});
    FAIL();
  } catch (const hnc::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("W = "), std::string::npos);
  }
}

TEST(SweepBandwidth, ReportedParametersHaveOneInteriorMinimum) {
  std::vector<double> grid;
  for (int i = 0; i < 200; ++i) grid.push_back(std::pow(10.0, std::log10(200.0) * i / 199.0));
  MolecularChannelParams base = reported_params();
  base.detector_radius_m = 1e-7;
  const auto curve = sweep_bandwidth(base, grid, LogMode::Verbatim, IntervalPolicy::per_bandwidth(1.0));
  int minima = 0;
  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    const double c = curve[i].capacity.bits_per_s;
    if (c < curve[i - 1].capacity.bits_per_s && c < curve[i + 1].capacity.bits_per_s) ++minima;
  }
  EXPECT_EQ(minima, 1);
}
