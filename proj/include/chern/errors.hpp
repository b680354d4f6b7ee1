#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chern {

// A constructor or family parameter outside its domain (negative genus, m < 1, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation of a class expression against a product whose dimension or
// factors do not fit the expression.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

}  // namespace chern
