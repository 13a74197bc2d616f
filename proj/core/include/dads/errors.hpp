#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dads {

/// Invalid configuration: bad parameters, violated preconditions, malformed
/// scenario files. Messages name the offending key/constraint.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation (t < 0, b <= 0, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A model evaluator produced a non-finite value.
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite right-hand side during integration; carries the offending time.
class SimulationError : public std::runtime_error {
public:
  SimulationError(const std::string& what, double time)
      : std::runtime_error(what), time(time) {}
  double time;
};

/// State magnitude exceeded the blowup threshold; carries the last valid
/// time and state.
class BlowupError : public std::runtime_error {
public:
  BlowupError(const std::string& what, double time, std::vector<double> state)
      : std::runtime_error(what), time(time), state(std::move(state)) {}
  double time;
  std::vector<double> state;
};

/// File system failure; message includes the path.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dads
