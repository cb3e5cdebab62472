#pragma once

// Terahertz electromagnetic sub-channel capacity: a sum of per-sub-band Shannon
// capacities over a flat transmit/noise PSD, and the single-band form used
// for distance sweeps.

#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "hnc/errors.hpp"

namespace hnc::thz {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct FreeSpace {};

// Free-space spreading times e^{k d}; k in 1/m.
struct FreeSpaceWithAbsorption {
  double absorption_per_m = 0.0;
};

using PathLossModel = std::variant<FreeSpace, FreeSpaceWithAbsorption>;

inline double absorption_coefficient(const PathLossModel& m) {
  if (const auto* a = std::get_if<FreeSpaceWithAbsorption>(&m)) return a->absorption_per_m;
  return 0.0;
}

/// Attenuation factor (4 pi d f / c)^2. Not clamped: it drops below 1 when
/// d is shorter than c / (4 pi f), which only happens in the near field.
inline double free_space_path_loss(double f_hz, double d_m) {
  if (!(f_hz > 0.0) || !(d_m > 0.0) || !std::isfinite(f_hz) || !std::isfinite(d_m)) {
    throw DomainError("free_space_path_loss: frequency and distance must be positive");
  }
  const double r = 4.0 * std::numbers::pi * d_m * f_hz / kSpeedOfLight;
  return r * r;
}

inline double path_loss(const PathLossModel& model, double f_hz, double d_m) {
  const double k = absorption_coefficient(model);
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw InvalidParameter("absorption coefficient must be finite and nonnegative");
  }
  return free_space_path_loss(f_hz, d_m) * std::exp(k * d_m);
}

struct ThzChannelParams {
  double f_low_hz = 0.0;
  double f_high_hz = 0.0;
  double delta_f_hz = 0.0;
  double distance_m = 0.0;
  double tx_psd_w_per_hz = 0.0;
  double noise_psd_w_per_hz = 0.0;
  PathLossModel path_loss = FreeSpace{};
};

struct SimplifiedThzParams {
  double bandwidth_hz = 0.0;
  double snr_linear = 0.0;
  double center_freq_hz = 0.0;
  double distance_m = 0.0;
  PathLossModel path_loss = FreeSpace{};
};

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}
inline bool pos(double v) { return v > 0.0 && std::isfinite(v); }
}  // namespace detail

inline void validate(const ThzChannelParams& p) {
  using detail::pos;
  using detail::require;
  require(pos(p.f_low_hz) && pos(p.f_high_hz) && p.f_low_hz < p.f_high_hz,
          "thz: need 0 < f_low < f_high");
  require(pos(p.delta_f_hz), "thz: delta_f must be positive");
  require((p.f_high_hz - p.f_low_hz) / p.delta_f_hz >= 1.0 - 1e-12,
          "thz: band must hold at least one sub-band");
  require(pos(p.distance_m), "thz: distance must be positive");
  require(pos(p.tx_psd_w_per_hz), "thz: transmit PSD must be positive");
  require(pos(p.noise_psd_w_per_hz), "thz: noise PSD must be positive");
  const double k = absorption_coefficient(p.path_loss);
  require(k >= 0.0 && std::isfinite(k), "thz: absorption coefficient must be nonnegative");
}

inline void validate(const SimplifiedThzParams& p) {
  using detail::pos;
  using detail::require;
  require(pos(p.bandwidth_hz), "thz: bandwidth must be positive");
  require(pos(p.snr_linear), "thz: SNR must be positive");
  require(pos(p.center_freq_hz), "thz: centre frequency must be positive");
  require(pos(p.distance_m), "thz: distance must be positive");
  const double k = absorption_coefficient(p.path_loss);
  require(k >= 0.0 && std::isfinite(k), "thz: absorption coefficient must be nonnegative");
}

struct SubBand {
  double center_hz;
  double width_hz;
};

// Full sub-bands of width delta_f from f_low with midpoint centres; a leftover
// sliver at the top becomes one narrower band centred on itself.
inline std::vector<SubBand> sub_bands(const ThzChannelParams& p) {
  validate(p);
  const double span = p.f_high_hz - p.f_low_hz;
  const auto full = static_cast<std::size_t>(std::floor(span / p.delta_f_hz * (1.0 + 1e-12)));
  std::vector<SubBand> bands;
  bands.reserve(full + 1);
  for (std::size_t i = 0; i < full; ++i) {
    bands.push_back({p.f_low_hz + (static_cast<double>(i) + 0.5) * p.delta_f_hz, p.delta_f_hz});
  }
  const double covered = static_cast<double>(full) * p.delta_f_hz;
  const double rest = span - covered;
  if (rest > 1e-9 * p.delta_f_hz) {
    bands.push_back({p.f_low_hz + covered + 0.5 * rest, rest});
  }
  return bands;
}

inline double shannon_bps(double width_hz, double snr) {
  return width_hz * std::log1p(snr) / std::numbers::ln2;
}

/// Sum over sub-bands of  df * log2(1 + S / (A(f_i, d) N)).
inline double capacity_sum(const ThzChannelParams& p) {
  double total = 0.0;
  for (const SubBand& b : sub_bands(p)) {
    const double a = path_loss(p.path_loss, b.center_hz, p.distance_m);
    total += shannon_bps(b.width_hz, p.tx_psd_w_per_hz / (a * p.noise_psd_w_per_hz));
  }
  return total;
}

/// B * log2(1 + SNR / A(f_c, d)). A is an attenuation (>= 1 in the far field)
/// and divides the SNR.
inline double capacity_simplified(const SimplifiedThzParams& p) {
  validate(p);
  const double a = path_loss(p.path_loss, p.center_freq_hz, p.distance_m);
  return shannon_bps(p.bandwidth_hz, p.snr_linear / a);
}

}  // namespace hnc::thz
