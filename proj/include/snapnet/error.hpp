#pragma once

#include <stdexcept>
#include <string>

namespace snapnet {

// Invalid parameters or inconsistent configuration. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data. The CLI maps this to exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void config_check(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

inline void data_check(bool ok, const std::string& msg) {
  if (!ok) throw DataError(msg);
}

}  // namespace snapnet
