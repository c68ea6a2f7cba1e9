#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermite {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial / rational text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The cubic has a rational root, so it does not define a cubic irrational.
class ReducibleError : public Error {
 public:
  using Error::Error;
};

// A parameter failed its certificate (e.g. an uncertified z).
class CertificateError : public Error {
 public:
  using Error::Error;
};

// A finite search window (z, shift k) was exhausted.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

// Division by an exactly vanishing quantity at a given index.
class VanishingDenominator : public Error {
 public:
  VanishingDenominator(const std::string& what, std::size_t index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace hermite
