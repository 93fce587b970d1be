#pragma once

#include <stdexcept>
#include <string>

namespace pncoh {

/// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exterior or symmetric power of a summand outside the supported plethysm
/// scope. `summand()` names the offending irreducible summand.
class UnsupportedPlethysm : public std::runtime_error {
 public:
  UnsupportedPlethysm(const std::string& what, std::string summand)
      : std::runtime_error(what), summand_(std::move(summand)) {}
  const std::string& summand() const noexcept { return summand_; }

 private:
  std::string summand_;
};

/// Polynomial workload above the desk-scale limits.
class ScaleExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold by construction failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pncoh
