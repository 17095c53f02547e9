#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inscribe {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input collapses to a single point (z0 = z1 = z2, or all simplex vertices equal).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A curve failed numerical embeddedness validation.
class EmbeddingFailure : public Error {
 public:
  using Error::Error;
};

// Operation requires a non-flat triangle or simplex.
class FlatTarget : public Error {
 public:
  using Error::Error;
};

// Operation requires a curve flagged C1.
class NotC1 : public Error {
 public:
  using Error::Error;
};

// Evaluation point lies on the diagonal (all three curve points coincide).
class DiagonalPoint : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Preimages kept testing critical after all probe perturbations were spent.
class RegularityFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace inscribe
