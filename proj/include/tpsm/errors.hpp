#pragma once

#include <stdexcept>
#include <string>

namespace tpsm {

// Violated precondition or malformed input. Callers get the offending
// quantity in the message.
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// Degenerate geometry or a numerically singular system (duplicate or
// collinear centers, non-invertible affine block, condition blowup).
class SingularError : public std::runtime_error {
 public:
  explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpsm
