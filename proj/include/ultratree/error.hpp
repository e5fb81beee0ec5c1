#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ultratree {

// Domain failure carrying a stable, machine-readable code such as
// "vertex-not-found" or "not-ultrametric".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input text (JSON, CSV, rational literals).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse-error", message) {}
};

}  // namespace ultratree
