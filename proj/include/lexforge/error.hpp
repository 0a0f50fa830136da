#pragma once

#include <stdexcept>
#include <string>

namespace lexforge {

/// Domain error carrying a machine-readable kind next to the human message.
/// Kinds in use: "parse", "invalid_structure", "inconsistent_spec", "domain".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace lexforge
