#pragma once

#include <stdexcept>
#include <string>

namespace fbwf {

// Precondition violations throw std::invalid_argument (or std::domain_error
// for special-function poles). NumericalError is reserved for failures that
// happen during a computation on otherwise valid input.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fbwf
