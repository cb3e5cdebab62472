#pragma once

// Grid search over the detector radius R_d and the interval factor c (tau =
// c / W) for a bandwidth curve whose shape lands in a target band: exactly
// one interior minimum at W in [w_lo, w_hi], and every capacity on the curve
// in [c_lo, c_hi]. The score is the summed log10 distance to the band, so a
// zero score means the band is met.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hnc/molecular_channel.hpp"

namespace hnc::calibration {

struct Band {
  double w_lo_hz = 10.0, w_hi_hz = 40.0;
  double c_lo_bps = 1e3, c_hi_bps = 5e3;
};

struct CurveShape {
  std::size_t interior_minima = 0;
  double w_min_hz = 0.0;    // at the single interior minimum, else at the global minimum
  double c_min_bps = 0.0;
  double c_max_bps = 0.0;
  bool any_negative = false;
};

inline CurveShape shape_of(const std::vector<molecular::BandwidthPoint>& curve) {
  CurveShape s;
  if (curve.empty()) return s;
  std::size_t argmin = 0, argmax = 0, interior = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double c = curve[i].capacity.bits_per_s;
    s.any_negative = s.any_negative || curve[i].capacity.negative;
    if (c < curve[argmin].capacity.bits_per_s) argmin = i;
    if (c > curve[argmax].capacity.bits_per_s) argmax = i;
    if (i > 0 && i + 1 < curve.size() && c < curve[i - 1].capacity.bits_per_s &&
        c < curve[i + 1].capacity.bits_per_s) {
      ++s.interior_minima;
      interior = i;
    }
  }
  s.w_min_hz = curve[s.interior_minima == 1 ? interior : argmin].bandwidth_hz;
  s.c_min_bps = curve[argmin].capacity.bits_per_s;
  s.c_max_bps = curve[argmax].capacity.bits_per_s;
  return s;
}

namespace detail {
// log10 distance of v from [lo, hi]; nonpositive v counts as far away
inline double log_gap(double v, double lo, double hi) {
  if (!(v > 0.0)) return 10.0;
  if (v < lo) return std::log10(lo / v);
  if (v > hi) return std::log10(v / hi);
  return 0.0;
}
}  // namespace detail

inline double score(const CurveShape& s, const Band& b) {
  const double minima_penalty = s.interior_minima == 1 ? 0.0 : 1.0 + std::abs(double(s.interior_minima) - 1.0);
  return minima_penalty + detail::log_gap(s.w_min_hz, b.w_lo_hz, b.w_hi_hz) +
         detail::log_gap(s.c_min_bps, b.c_lo_bps, b.c_hi_bps) + detail::log_gap(s.c_max_bps, b.c_lo_bps, b.c_hi_bps);
}

inline bool within_band(const CurveShape& s, const Band& b) { return score(s, b) == 0.0; }

struct SearchSpace {
  double rd_lo_m = 1e-7, rd_hi_m = 1e-4;
  std::size_t rd_points = 31;
  double c_lo = 0.1, c_hi = 10.0;
  std::size_t c_points = 21;
};

struct Candidate {
  double detector_radius_m = 0.0;
  double tau_factor = 0.0;
  CurveShape shape;
  double score = 0.0;
};

struct SearchResult {
  Candidate best;
  std::size_t evaluated = 0;
  std::size_t failed = 0;  // grid points where the capacity could not be evaluated
};

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    g[i] = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

/// Deterministic: candidates are visited R_d-major in grid order and ties keep
/// the first one seen.
inline SearchResult search(const molecular::MolecularChannelParams& base, const std::vector<double>& w_grid,
                           molecular::LogMode mode, const SearchSpace& space = {}, const Band& band = {}) {
  SearchResult r;
  bool have = false;
  for (double rd : log_grid(space.rd_lo_m, space.rd_hi_m, space.rd_points)) {
    for (double c : log_grid(space.c_lo, space.c_hi, space.c_points)) {
      molecular::MolecularChannelParams p = base;
      p.detector_radius_m = rd;
      ++r.evaluated;
      std::vector<molecular::BandwidthPoint> curve;
      try {
        curve = molecular::sweep_bandwidth(p, w_grid, mode, molecular::IntervalPolicy::per_bandwidth(c));
      } catch (const DomainError&) {
        ++r.failed;
        continue;
      }
      Candidate cand{rd, c, shape_of(curve), 0.0};
      cand.score = score(cand.shape, band);
      if (!have || cand.score < r.best.score) {
        r.best = cand;
        have = true;
      }
    }
  }
  return r;
}

}  // namespace hnc::calibration
