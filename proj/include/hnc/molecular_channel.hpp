#pragma once

// Capacity of the diffusion-based molecular sub-channel as a closed-form
// seven-term expression in bandwidth, mean thermodynamic power, temperature,
// diffusion coefficient, distance, detector radius and molecule-distribution
// interval.
//
//   C2 = 2W (1 + log2(P / 3W kB T)) - 2 log2(pi D d) - (4 d / 3 ln2) sqrt(pi W / D)
//      + 2W x - 2W ln(W tau) - 2W ln Gamma(x) - 2W (1 - x) psi(x)
//
//   x  = 2 P Rd / (9 W^2 d kB T)
//
// The expression mixes log2 with natural logs. LogMode::Verbatim evaluates it
// as written; LogMode::NatsConsistent divides the three natural-log terms by
// ln 2.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hnc/errors.hpp"
#include "hnc/specfun.hpp"

namespace hnc::molecular {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

enum class LogMode { Verbatim, NatsConsistent };

struct MolecularChannelParams {
  double bandwidth_hz = 0.0;      // W
  double mean_power_w = 0.0;      // mean transmit thermodynamic power
  double temperature_k = 0.0;
  double diffusion_m2_s = 0.0;
  double distance_m = 0.0;        // transmitter to detector centre
  double detector_radius_m = 0.0;
  double interval_s = 0.0;        // tau
};

inline void validate(const MolecularChannelParams& p) {
  auto pos = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!pos(p.bandwidth_hz)) throw InvalidParameter("molecular: bandwidth must be positive");
  if (!pos(p.mean_power_w)) throw InvalidParameter("molecular: mean power must be positive");
  if (!pos(p.temperature_k)) throw InvalidParameter("molecular: temperature must be positive");
  if (!pos(p.diffusion_m2_s)) throw InvalidParameter("molecular: diffusion coefficient must be positive");
  if (!pos(p.distance_m)) throw InvalidParameter("molecular: distance must be positive");
  if (!pos(p.detector_radius_m)) throw InvalidParameter("molecular: detector radius must be positive");
  if (!pos(p.interval_s)) throw InvalidParameter("molecular: interval tau must be positive");
}

/// x = 2 P Rd / (9 W^2 d kB T), the argument of ln Gamma and psi.
inline double gamma_argument(const MolecularChannelParams& p) {
  validate(p);
  const double x = 2.0 * p.mean_power_w * p.detector_radius_m /
                   (9.0 * p.bandwidth_hz * p.bandwidth_hz * p.distance_m * kBoltzmann * p.temperature_k);
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw DomainError("molecular: gamma argument not representable (" + std::to_string(x) + ")");
  }
  return x;
}

enum Term : std::size_t {
  kPowerTerm = 0,       // 2W (1 + log2(P / 3W kB T))
  kSpreadTerm,          // -2 log2(pi D d)
  kDelayTerm,           // -(4d / 3 ln2) sqrt(pi W / D)
  kArgumentTerm,        // 2W x
  kIntervalTerm,        // -2W ln(W tau)
  kLnGammaTerm,         // -2W ln Gamma(x)
  kDigammaTerm,         // -2W (1 - x) psi(x)
  kTermCount
};

inline constexpr std::array<const char*, kTermCount> kTermNames = {
    "power", "spread", "delay", "argument", "interval", "ln_gamma", "digamma"};

struct MolecularCapacity {
  std::array<double, kTermCount> terms{};
  double gamma_argument = 0.0;
  double bits_per_s = 0.0;
  // The expression is not a bound that stays positive; negative values are
  // reported unclamped.
  bool negative = false;
};

inline MolecularCapacity capacity_molecular(const MolecularChannelParams& p,
                                            LogMode mode = LogMode::Verbatim) {
  const double x = gamma_argument(p);
  if (x < specfun::kValidatedMin || x > specfun::kValidatedMax) {
    throw DomainError("molecular: gamma argument " + std::to_string(x) +
                      " outside the validated special-function range");
  }
  const double w = p.bandwidth_hz;
  const double ln2 = std::numbers::ln2;
  const double nat = (mode == LogMode::NatsConsistent) ? 1.0 / ln2 : 1.0;

  MolecularCapacity out;
  out.gamma_argument = x;
  auto& t = out.terms;
  t[kPowerTerm] = 2.0 * w * (1.0 + std::log2(p.mean_power_w / (3.0 * w * kBoltzmann * p.temperature_k)));
  t[kSpreadTerm] = -2.0 * std::log2(std::numbers::pi * p.diffusion_m2_s * p.distance_m);
  t[kDelayTerm] = -(4.0 * p.distance_m / (3.0 * ln2)) * std::sqrt(std::numbers::pi * w / p.diffusion_m2_s);
  t[kArgumentTerm] = 2.0 * w * x;
  t[kIntervalTerm] = -2.0 * w * std::log(w * p.interval_s) * nat;
  t[kLnGammaTerm] = -2.0 * w * specfun::ln_gamma(x) * nat;
  t[kDigammaTerm] = -2.0 * w * (1.0 - x) * specfun::digamma(x) * nat;

  double sum = 0.0;
  for (double term : t) sum += term;
  out.bits_per_s = sum;
  out.negative = sum < 0.0;
  return out;
}

// How tau follows the bandwidth in a sweep.
struct IntervalPolicy {
  enum class Kind { Fixed, PerBandwidth };
  Kind kind = Kind::Fixed;
  double value = 0.0;  // seconds when Fixed; dimensionless c in tau = c / W otherwise

  static IntervalPolicy fixed(double tau_s) { return {Kind::Fixed, tau_s}; }
  static IntervalPolicy per_bandwidth(double c) { return {Kind::PerBandwidth, c}; }

  double interval_for(double w_hz) const {
    return kind == Kind::Fixed ? value : value / w_hz;
  }
};

struct BandwidthPoint {
  double bandwidth_hz;
  MolecularCapacity capacity;
};

inline std::vector<BandwidthPoint> sweep_bandwidth(const MolecularChannelParams& base,
                                                   const std::vector<double>& w_grid,
                                                   LogMode mode, IntervalPolicy tau) {
  if (w_grid.empty()) throw InvalidParameter("molecular sweep: empty bandwidth grid");
  for (std::size_t i = 0; i < w_grid.size(); ++i) {
    if (!(w_grid[i] > 0.0) || (i > 0 && !(w_grid[i] > w_grid[i - 1]))) {
      throw InvalidParameter("molecular sweep: grid must be positive and strictly increasing");
    }
  }
  std::vector<BandwidthPoint> out;
  out.reserve(w_grid.size());
  for (double w : w_grid) {
    MolecularChannelParams p = base;
    p.bandwidth_hz = w;
    p.interval_s = tau.interval_for(w);
    const std::string at = " (at W = " + std::to_string(w) + " Hz)";
    try {
      out.push_back({w, capacity_molecular(p, mode)});
    } catch (const DomainError& e) {
      throw DomainError(e.what() + at);
    } catch (const InvalidParameter& e) {
      throw InvalidParameter(e.what() + at);
    }
  }
  return out;
}

/// Keeps base.interval_s for every grid point.
inline std::vector<BandwidthPoint> sweep_bandwidth(const MolecularChannelParams& base,
                                                   const std::vector<double>& w_grid,
                                                   LogMode mode = LogMode::Verbatim) {
  return sweep_bandwidth(base, w_grid, mode, IntervalPolicy::fixed(base.interval_s));
}

}  // namespace hnc::molecular
