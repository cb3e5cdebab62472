#pragma once

// Behavioural end-to-end simulation of the relay chain
//
//   THz pulses -> T2M charge/threshold relay -> molecule release
//   -> 3-D diffusion to an absorbing detector sphere -> M2N detect/threshold
//   -> Ca2+ release -> Bernoulli vesicle release -> spike -> N2M window decode
//
// with on-off keying, one symbol per period. Each relay is a threshold and
// reset state machine; no circuit dynamics are modelled. Molecules arriving
// after the end of the symbol window they were released in are dropped.
//
// Every random draw comes from a seed-derived stream, so a run is a pure
// function of (bits, configs, seed).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hnc/errors.hpp"

namespace hnc::link {

using Bits = std::vector<std::uint8_t>;

struct RelayConfig {
  // T2M: capacitor charge in normalised units
  double t2m_charge_threshold = 1.0;
  double t2m_charge_per_pulse = 1.0;
  std::uint64_t t2m_pulses_per_one = 1;  // burst length used to send a 1
  std::uint64_t t2m_molecules_per_release = 100;
  // M2N: molecule-count threshold of the detector/comparator stage
  std::uint64_t m2n_detect_threshold = 1;
  std::uint64_t m2n_ions_per_release = 1;
  // synapse
  double vesicle_release_prob_per_ca = 1.0;
  std::uint64_t vesicle_count = 1;
  std::uint64_t molecules_per_vesicle = 1;
  // N2M: spikes per window needed to decode a 1
  std::uint64_t n2m_decision_threshold = 1;
};

struct PropagationConfig {
  double diffusion_m2_s = 1e-9;
  double distance_m = 2e-6;         // source to detector centre
  double detector_radius_m = 1e-6;
  double symbol_period_s = 1.0;
  double max_wait_s = 1.0;          // per-molecule arrival cutoff
};

inline void validate(const RelayConfig& c) {
  auto pos = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!pos(c.t2m_charge_threshold) || !pos(c.t2m_charge_per_pulse)) {
    throw InvalidParameter("relay: T2M charge threshold and charge per pulse must be positive");
  }
  if (c.t2m_pulses_per_one < 1 || c.t2m_molecules_per_release < 1 || c.m2n_detect_threshold < 1 ||
      c.m2n_ions_per_release < 1 || c.vesicle_count < 1 || c.molecules_per_vesicle < 1 ||
      c.n2m_decision_threshold < 1) {
    throw InvalidParameter("relay: all counts and count thresholds must be >= 1");
  }
  if (!(c.vesicle_release_prob_per_ca >= 0.0 && c.vesicle_release_prob_per_ca <= 1.0)) {
    throw InvalidParameter("relay: vesicle release probability must lie in [0, 1]");
  }
}

inline void validate(const PropagationConfig& p) {
  auto pos = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!pos(p.diffusion_m2_s) || !pos(p.distance_m) || !pos(p.detector_radius_m) ||
      !pos(p.symbol_period_s) || !(p.max_wait_s > 0.0)) {
    throw InvalidParameter("propagation: all parameters must be positive");
  }
  if (!(p.detector_radius_m < p.distance_m)) {
    throw InvalidParameter("propagation: detector radius must be smaller than the distance");
  }
}

enum class EventKind {
  PulseSent,
  ChargeThresholdCrossed,
  MoleculesReleased,
  MoleculeArrived,
  IonsReleased,
  VesicleFired,
  SpikeEmitted,
  BitDecoded,
};

inline const char* event_name(EventKind k) {
  switch (k) {
    case EventKind::PulseSent: return "PulseSent";
    case EventKind::ChargeThresholdCrossed: return "ChargeThresholdCrossed";
    case EventKind::MoleculesReleased: return "MoleculesReleased";
    case EventKind::MoleculeArrived: return "MoleculeArrived";
    case EventKind::IonsReleased: return "IonsReleased";
    case EventKind::VesicleFired: return "VesicleFired";
    case EventKind::SpikeEmitted: return "SpikeEmitted";
    case EventKind::BitDecoded: return "BitDecoded";
  }
  return "?";
}

// payload by kind: PulseSent charge added; ChargeThresholdCrossed charge held
// at the crossing; MoleculesReleased / IonsReleased counts; MoleculeArrived 1;
// VesicleFired vesicles fired; SpikeEmitted 1; BitDecoded the bit.
struct Event {
  double time_s;
  EventKind kind;
  double payload;

  friend bool operator==(const Event&, const Event&) = default;
};

struct LinkTrace {
  std::vector<Event> events;
  Bits sent_bits;
  Bits decoded_bits;
};

struct SimResult {
  double ber = 0.0;
  // correctly decoded bits per second of air time; no framing overhead
  double throughput_bps = 0.0;
  std::uint64_t trials = 0;  // symbols simulated
  std::uint64_t seed = 0;
  std::uint64_t bit_errors = 0;
};

// Symbol windows are (k w, (k+1) w]; an event at the exact end of window k
// belongs to window k.
inline std::int64_t window_index(double t, double w) {
  auto k = static_cast<std::int64_t>(std::ceil(t / w)) - 1;
  if (t <= static_cast<double>(k) * w) {
    --k;
  } else if (t > static_cast<double>(k + 1) * w) {
    ++k;
  }
  return k;
}

inline double window_end(std::int64_t k, double w) { return static_cast<double>(k + 1) * w; }

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  // splitmix64 finaliser over the combined words
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1) + 0xBF58476D1CE4E5B9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------- T2M relay

struct Release {
  double time_s;
  std::uint64_t molecules;
  double charge_at_crossing;
};

struct T2mOutput {
  std::vector<Release> releases;
  double residual_charge = 0.0;
};

/// Charge accumulates per received pulse; reaching the threshold fires the
/// pump (one release) and discharges the capacitor to zero.
inline T2mOutput simulate_t2m(std::span<const double> pulse_times, const RelayConfig& cfg) {
  validate(cfg);
  T2mOutput out;
  double charge = 0.0;
  for (double t : pulse_times) {
    charge += cfg.t2m_charge_per_pulse;
    if (charge >= cfg.t2m_charge_threshold) {
      out.releases.push_back({t, cfg.t2m_molecules_per_release, charge});
      charge = 0.0;
    }
  }
  out.residual_charge = charge;
  return out;
}

// ---------------------------------------------------------------- diffusion

/// Probability that a molecule started at distance d from the centre of an
/// absorbing sphere of radius R ever reaches it (3-D): R / d.
inline double hit_probability(const PropagationConfig& p) {
  return p.detector_radius_m / p.distance_m;
}

/// P(first passage <= t) = (R / d) erfc((d - R) / sqrt(4 D t)).
inline double arrival_probability_by(const PropagationConfig& p, double t_s) {
  if (!(t_s > 0.0)) return 0.0;
  const double gap = p.distance_m - p.detector_radius_m;
  return hit_probability(p) * std::erfc(gap / std::sqrt(4.0 * p.diffusion_m2_s * t_s));
}

/// First-passage time of each molecule, or nullopt if it never reaches the
/// detector or arrives after max_wait. Conditioned on hitting, the passage
/// time is Levy distributed: T = (d - R)^2 / (2 D Z^2), Z standard normal.
inline std::vector<std::optional<double>> sample_first_passage(const PropagationConfig& p,
                                                               std::uint64_t seed,
                                                               std::size_t n_molecules) {
  validate(p);
  if (n_molecules < 1) throw InvalidParameter("first passage: need at least one molecule");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double p_hit = hit_probability(p);
  const double gap = p.distance_m - p.detector_radius_m;
  const double scale = gap * gap / (2.0 * p.diffusion_m2_s);

  std::vector<std::optional<double>> out;
  out.reserve(n_molecules);
  for (std::size_t i = 0; i < n_molecules; ++i) {
    if (uniform01(rng) >= p_hit) {
      out.emplace_back(std::nullopt);
      continue;
    }
    const double z = normal(rng);
    const double t = scale / (z * z);
    if (t <= p.max_wait_s) {
      out.emplace_back(t);
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

// ---------------------------------------------------------------- M2N + synapse

struct SynapseOutput {
  std::vector<double> spikes;
  std::vector<Event> events;  // IonsReleased, VesicleFired, SpikeEmitted
};

/// Per window: once arrivals reach the detect threshold the relay releases
/// Ca2+; each vesicle then fires with the configured probability, and any
/// firing produces one spike at the end of the window. Exactly vesicle_count
/// uniforms are drawn per triggered window whatever the probability, so runs
/// that differ only in the probability share their random numbers.
inline SynapseOutput simulate_m2n_and_synapse(std::span<const double> arrivals, double window_s,
                                              const RelayConfig& cfg, std::uint64_t seed) {
  validate(cfg);
  if (!(window_s > 0.0)) throw InvalidParameter("synapse: window must be positive");
  if (!std::is_sorted(arrivals.begin(), arrivals.end())) {
    throw InvalidParameter("synapse: arrivals must be time ordered");
  }
  std::mt19937_64 rng(seed);
  SynapseOutput out;

  std::size_t i = 0;
  while (i < arrivals.size()) {
    const std::int64_t k = window_index(arrivals[i], window_s);
    std::uint64_t count = 0;
    std::optional<double> crossed_at;
    for (; i < arrivals.size() && window_index(arrivals[i], window_s) == k; ++i) {
      if (++count == cfg.m2n_detect_threshold) crossed_at = arrivals[i];
    }
    if (!crossed_at || k < 0) continue;

    out.events.push_back({*crossed_at, EventKind::IonsReleased,
                          static_cast<double>(cfg.m2n_ions_per_release)});
    std::uint64_t fired = 0;
    for (std::uint64_t v = 0; v < cfg.vesicle_count; ++v) {
      if (uniform01(rng) < cfg.vesicle_release_prob_per_ca) ++fired;
    }
    if (fired > 0) {
      out.events.push_back({*crossed_at, EventKind::VesicleFired, static_cast<double>(fired)});
      const double t_spike = window_end(k, window_s);
      out.spikes.push_back(t_spike);
      out.events.push_back({t_spike, EventKind::SpikeEmitted, 1.0});
    }
  }
  return out;
}

// ---------------------------------------------------------------- N2M decode

/// Rectangular response over each symbol window: a 1 when the window holds at
/// least n2m_decision_threshold spikes.
inline Bits decode_n2m(std::span<const double> spikes, double window_s, std::size_t n_windows,
                       const RelayConfig& cfg) {
  if (!(window_s > 0.0)) throw InvalidParameter("decode: window must be positive");
  std::vector<std::uint64_t> counts(n_windows, 0);
  for (double t : spikes) {
    const std::int64_t k = window_index(t, window_s);
    if (k >= 0 && static_cast<std::size_t>(k) < n_windows) ++counts[static_cast<std::size_t>(k)];
  }
  Bits bits(n_windows, 0);
  for (std::size_t k = 0; k < n_windows; ++k) {
    bits[k] = counts[k] >= cfg.n2m_decision_threshold ? 1 : 0;
  }
  return bits;
}

// ---------------------------------------------------------------- full link

inline constexpr std::uint64_t kDiffusionStream = 1;
inline constexpr std::uint64_t kSynapseStream = 2;

/// Pulses of a 1-burst occupy the first 1% of the symbol period.
inline double burst_pulse_time(std::size_t symbol, std::uint64_t j, std::uint64_t burst, double period) {
  return static_cast<double>(symbol) * period +
         static_cast<double>(j + 1) * (0.01 * period / static_cast<double>(burst));
}

inline std::pair<SimResult, LinkTrace> run_link(const Bits& bits, const RelayConfig& relay,
                                                const PropagationConfig& prop, std::uint64_t seed) {
  validate(relay);
  validate(prop);
  if (bits.empty()) throw InvalidParameter("link: bit sequence must not be empty");
  if (static_cast<double>(relay.t2m_pulses_per_one) * relay.t2m_charge_per_pulse <
      relay.t2m_charge_threshold) {
    throw SimulationInconsistency(
        "link: a 1-burst of t2m_pulses_per_one pulses cannot reach the T2M charge threshold");
  }
  const double period = prop.symbol_period_s;
  LinkTrace trace;
  trace.sent_bits = bits;

  std::vector<double> pulses;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == 0) continue;
    for (std::uint64_t j = 0; j < relay.t2m_pulses_per_one; ++j) {
      const double t = burst_pulse_time(k, j, relay.t2m_pulses_per_one, period);
      pulses.push_back(t);
      trace.events.push_back({t, EventKind::PulseSent, relay.t2m_charge_per_pulse});
    }
  }

  const T2mOutput t2m = simulate_t2m(pulses, relay);
  std::vector<double> arrivals;
  for (std::size_t r = 0; r < t2m.releases.size(); ++r) {
    const Release& rel = t2m.releases[r];
    trace.events.push_back({rel.time_s, EventKind::ChargeThresholdCrossed, rel.charge_at_crossing});
    trace.events.push_back({rel.time_s, EventKind::MoleculesReleased, static_cast<double>(rel.molecules)});
    const std::int64_t k = window_index(rel.time_s, period);
    const auto passages = sample_first_passage(prop, derive_seed(seed, kDiffusionStream, r),
                                               static_cast<std::size_t>(rel.molecules));
    for (const auto& fp : passages) {
      if (!fp) continue;
      double t = rel.time_s + *fp;
      if (!(t > rel.time_s)) t = std::nextafter(rel.time_s, std::numeric_limits<double>::infinity());
      if (window_index(t, period) != k) continue;  // inter-symbol straggler
      arrivals.push_back(t);
    }
  }
  std::sort(arrivals.begin(), arrivals.end());
  for (double t : arrivals) trace.events.push_back({t, EventKind::MoleculeArrived, 1.0});

  SynapseOutput syn = simulate_m2n_and_synapse(arrivals, period, relay, derive_seed(seed, kSynapseStream));
  trace.events.insert(trace.events.end(), syn.events.begin(), syn.events.end());

  trace.decoded_bits = decode_n2m(syn.spikes, period, bits.size(), relay);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    trace.events.push_back({window_end(static_cast<std::int64_t>(k), period), EventKind::BitDecoded,
                            static_cast<double>(trace.decoded_bits[k])});
  }
  std::stable_sort(trace.events.begin(), trace.events.end(), [](const Event& a, const Event& b) {
    if (a.time_s != b.time_s) return a.time_s < b.time_s;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });

  SimResult res;
  res.seed = seed;
  res.trials = bits.size();
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != trace.decoded_bits[k]) ++res.bit_errors;
  }
  const double n = static_cast<double>(bits.size());
  res.ber = static_cast<double>(res.bit_errors) / n;
  res.throughput_bps = (n - static_cast<double>(res.bit_errors)) / (n * period);
  return {res, std::move(trace)};
}

// ---------------------------------------------------------------- export

inline std::string trace_csv(const LinkTrace& trace) {
  std::string out = "time_s,event_kind,payload\n";
  char buf[32];
  for (const Event& e : trace.events) {
    out.append(buf, std::to_chars(buf, buf + sizeof buf, e.time_s).ptr);
    out += ',';
    out += event_name(e.kind);
    out += ',';
    out.append(buf, std::to_chars(buf, buf + sizeof buf, e.payload).ptr);
    out += '\n';
  }
  return out;
}

inline Bits random_bits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 0xB175));
  Bits bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
  return bits;
}

}  // namespace hnc::link
