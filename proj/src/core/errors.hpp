#pragma once

#include <stdexcept>
#include <string>

namespace intervalcast {

// Error taxonomy. Families map onto process exit codes / C-API statuses:
// configuration (2), numerical failure (3), I/O and parsing (4).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : ConfigError {
  explicit DimensionError(const std::string& msg) : ConfigError(msg) {}
};

struct CalibrationError : ConfigError {
  explicit CalibrationError(const std::string& msg) : ConfigError(msg) {}
};

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MetricError : std::runtime_error {
  explicit MetricError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IngestError : std::runtime_error {
  explicit IngestError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : IngestError {
  explicit ParseError(const std::string& msg) : IngestError(msg) {}
};

}  // namespace intervalcast
