#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fedsim {

// Process exit codes shared by the CLI and the test harness.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitIo = 4;

// Invalid configuration or violated precondition. Messages are
// field-level: "<field>: <problem>".
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data: missing columns, unknown label names.
class SchemaError : public ConfigError {
 public:
  explicit SchemaError(const std::string& what) : ConfigError(what) {}
};

class EmptyDatasetError : public ConfigError {
 public:
  explicit EmptyDatasetError(const std::string& what) : ConfigError(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite loss during training. Carries where it happened; the round
// engine annotates round/client before rethrowing.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::size_t epoch, std::size_t step)
      : std::runtime_error(what), epoch(epoch), step(step) {}

  DivergenceError with_context(std::size_t round_index, std::size_t client_id) const {
    DivergenceError e("round " + std::to_string(round_index) + ", client " +
                          std::to_string(client_id) + ": " + what(),
                      epoch, step);
    e.round = round_index;
    e.client = client_id;
    return e;
  }

  std::size_t epoch = 0;
  std::size_t step = 0;
  std::size_t round = static_cast<std::size_t>(-1);
  std::size_t client = static_cast<std::size_t>(-1);
};

}  // namespace fedsim
