#pragma once

#include <stdexcept>
#include <string>

namespace sakhr {

// Error categories; the CLI maps each category onto a distinct exit code.
enum class ErrorKind {
  io,       // missing or unreadable file
  schema,   // CSV schema violation or row-level parse failure
  format,   // file is not a sakhr model archive
  version,  // archive format_version not supported by this build
  fit,      // training precondition violated
  input,    // prediction-time input outside the model's feature space
  config,   // invalid configuration value
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sakhr
