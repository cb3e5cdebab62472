#pragma once

// Cascade of the three sub-channels. The end-to-end rate cannot exceed the
// weakest link, so min(C1, C2, C3) is reported as an upper bound on the
// hybrid channel's capacity.

#include <array>
#include <cmath>
#include <variant>

#include "hnc/errors.hpp"
#include "hnc/molecular_channel.hpp"
#include "hnc/neural_channel.hpp"
#include "hnc/thz_channel.hpp"

namespace hnc {

struct CapacityReport {
  double c1_thz_bps = 0.0;
  double c2_molecular_bps = 0.0;
  double c3_neural_bps = 0.0;
  double c3_neural_nats_ps = 0.0;  // informational; cascade uses c3_neural_bps
  double cascade_bps = 0.0;
  Channel bottleneck = Channel::Molecular;
  bool thz_negative = false;
  bool molecular_negative = false;
  bool neural_negative = false;
};

// Ties resolve in this order.
inline constexpr std::array<Channel, 3> kTieBreakOrder = {Channel::Molecular, Channel::Neural,
                                                          Channel::Thz};

inline CapacityReport cascade_capacity(double c1, double c2, double c3) {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
    throw DomainError("cascade: sub-channel capacities must be finite");
  }
  CapacityReport r;
  r.c1_thz_bps = c1;
  r.c2_molecular_bps = c2;
  r.c3_neural_bps = c3;
  r.thz_negative = c1 < 0.0;
  r.molecular_negative = c2 < 0.0;
  r.neural_negative = c3 < 0.0;

  auto value = [&](Channel c) {
    switch (c) {
      case Channel::Thz: return c1;
      case Channel::Molecular: return c2;
      case Channel::Neural: return c3;
    }
    return c1;
  };
  r.bottleneck = kTieBreakOrder[0];
  r.cascade_bps = value(r.bottleneck);
  for (Channel c : kTieBreakOrder) {
    if (value(c) < r.cascade_bps) {
      r.cascade_bps = value(c);
      r.bottleneck = c;
    }
  }
  return r;
}

using ThzParams = std::variant<thz::ThzChannelParams, thz::SimplifiedThzParams>;

inline double thz_capacity(const ThzParams& p) {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, thz::ThzChannelParams>) {
          return thz::capacity_sum(v);
        } else {
          return thz::capacity_simplified(v);
        }
      },
      p);
}

namespace detail {
template <typename F>
auto labelled(Channel channel, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ChannelError(channel, ChannelError::Kind::Domain, e.what());
  } catch (const InvalidParameter& e) {
    throw ChannelError(channel, ChannelError::Kind::InvalidParameter, e.what());
  }
}
}  // namespace detail

inline CapacityReport full_report(const ThzParams& thz_params,
                                  const molecular::MolecularChannelParams& mol,
                                  const neural::NeuralChannelParams& neu,
                                  molecular::LogMode mode = molecular::LogMode::Verbatim) {
  const double c1 = detail::labelled(Channel::Thz, [&] { return thz_capacity(thz_params); });
  const auto c2 = detail::labelled(Channel::Molecular, [&] { return molecular::capacity_molecular(mol, mode); });
  const auto c3 = detail::labelled(Channel::Neural, [&] { return neural::capacity_neural(neu); });
  CapacityReport r = cascade_capacity(c1, c2.bits_per_s, c3.bits_per_s);
  r.c3_neural_nats_ps = c3.nats_per_s;
  return r;
}

}  // namespace hnc
