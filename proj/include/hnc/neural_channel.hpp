#pragma once

// Neural sub-channel capacity of a link of identical neurons with refractory
// period delta and latency jitter sigma, driven at mean rate a:
//
//   C3 = a H / (1 + a delta)
//   H  = a sigma e^{-a sigma} - (1 - e^{-a sigma}) ln(e^{-a sigma})
//
// H is in nats. As written it simplifies to H = a sigma, so C3 grows without
// bound in a; the expression is evaluated term for term anyway.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hnc/errors.hpp"

namespace hnc::neural {

struct NeuralChannelParams {
  double input_rate_pps = 0.0;   // a
  double refractory_s = 0.0;     // delta
  double latency_sigma_s = 0.0;  // sigma
};

inline void validate(const NeuralChannelParams& p) {
  if (!(p.input_rate_pps >= 0.0) || !std::isfinite(p.input_rate_pps)) {
    throw InvalidParameter("neural: input rate must be finite and nonnegative");
  }
  if (!(p.refractory_s > 0.0) || !std::isfinite(p.refractory_s)) {
    throw InvalidParameter("neural: refractory period must be positive");
  }
  if (!(p.latency_sigma_s > 0.0) || !std::isfinite(p.latency_sigma_s)) {
    throw InvalidParameter("neural: latency standard deviation must be positive");
  }
}

/// Information per signal in nats.
inline double information_per_signal(double rate_pps, double sigma_s) {
  if (!(rate_pps >= 0.0) || !(sigma_s > 0.0)) {
    throw InvalidParameter("neural: need rate >= 0 and sigma > 0");
  }
  const double u = rate_pps * sigma_s;
  const double e = std::exp(-u);
  // ln(e^{-u}) is -u; once e is subnormal (or zero) its logarithm is no
  // longer accurate, so use the exact value.
  const double log_e = std::isnormal(e) ? std::log(e) : -u;
  return u * e - (1.0 - e) * log_e;
}

struct NeuralCapacity {
  double nats_per_s = 0.0;
  double bits_per_s = 0.0;
};

inline NeuralCapacity capacity_neural(const NeuralChannelParams& p) {
  validate(p);
  const double a = p.input_rate_pps;
  if (a == 0.0) return {};
  const double nats = a * information_per_signal(a, p.latency_sigma_s) / (1.0 + a * p.refractory_s);
  return {nats, nats / std::numbers::ln2};
}

struct RatePoint {
  double rate_pps;
  NeuralCapacity capacity;
};

inline std::vector<RatePoint> sweep_input_rate(const NeuralChannelParams& base,
                                               const std::vector<double>& a_grid) {
  if (a_grid.empty()) throw InvalidParameter("neural sweep: empty rate grid");
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    if (!(a_grid[i] >= 0.0) || (i > 0 && !(a_grid[i] > a_grid[i - 1]))) {
      throw InvalidParameter("neural sweep: grid must be nonnegative and strictly increasing");
    }
  }
  std::vector<RatePoint> out;
  out.reserve(a_grid.size());
  for (double a : a_grid) {
    NeuralChannelParams p = base;
    p.input_rate_pps = a;
    out.push_back({a, capacity_neural(p)});
  }
  return out;
}

}  // namespace hnc::neural
