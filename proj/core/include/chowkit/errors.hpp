// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace chowkit {

/// Base for failures that come from the mathematics of the input rather than
/// from I/O. The CLI maps these to exit status 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyFamily : public DomainError {
 public:
  EmptyFamily() : DomainError("field family is empty") {}
};

/// Adaptive integration could not meet its tolerance (step-size underflow).
class IntegrationFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A sampled lift lost strict monotonicity. Flows of smooth fields preserve
/// monotonicity, so this indicates a tolerance breach.
class MonotonicityViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotBracketGenerating : public DomainError {
 public:
  using DomainError::DomainError;
};

class SetsIntersect : public DomainError {
 public:
  explicit SetsIntersect(double distance)
      : DomainError("sets intersect (distance " + std::to_string(distance) + ")"),
        distance_(distance) {}
  double distance() const noexcept { return distance_; }

 private:
  double distance_;
};

class InvalidSeed : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidBody : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed serialized input. The CLI maps this to exit status 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chowkit
