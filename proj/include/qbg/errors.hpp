#pragma once

#include <stdexcept>

namespace qbg {

// Thrown when an input fails a documented precondition (bad probabilities,
// non-normalized state, malformed file, ...). The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbg
