#pragma once

#include <stdexcept>
#include <string>

namespace asmc {

/// Invalid construction input: non-prime characteristic, exhausted size budget,
/// zero curve constant, malformed coefficient list.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated computation could not decide its answer at the requested
/// precision. Callers retry with a larger precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Always a bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace asmc
