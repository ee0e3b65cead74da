// Error types shared across models.

#pragma once

#include <stdexcept>
#include <string>

namespace decaykit {

// Thrown when an evaluation lands on (or within machine precision of) a true
// pole of a model expression, e.g. a cavity resonance denominator or the
// eps = 0 longitudinal divergence. The message carries the offending inputs.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace decaykit
