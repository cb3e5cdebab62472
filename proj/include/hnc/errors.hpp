#pragma once

#include <stdexcept>
#include <string>

namespace hnc {

// Argument outside the mathematical domain of a function (x <= 0 for lnGamma,
// special-function argument outside the validated range, overflow).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A parameter struct violates its documented invariants.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Run configuration problem: unknown key, missing required key, bad value.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// Link simulation configured so that a transmitted 1 can never trigger the
// terahertz-to-molecular relay.
class SimulationInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Channel { Thz, Molecular, Neural };

inline const char* channel_name(Channel c) {
  switch (c) {
    case Channel::Thz: return "thz";
    case Channel::Molecular: return "molecular";
    case Channel::Neural: return "neural";
  }
  return "?";
}

// Wraps a sub-channel failure with the channel it came from.
class ChannelError : public std::runtime_error {
 public:
  enum class Kind { Domain, InvalidParameter };

  ChannelError(Channel channel, Kind kind, const std::string& what)
      : std::runtime_error(std::string(channel_name(channel)) + " channel: " + what),
        channel_(channel),
        kind_(kind) {}

  Channel channel() const noexcept { return channel_; }
  Kind kind() const noexcept { return kind_; }

 private:
  Channel channel_;
  Kind kind_;
};

}  // namespace hnc
