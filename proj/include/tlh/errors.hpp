#pragma once

#include <stdexcept>
#include <string>

namespace tlh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term does not lie on the (q,a,t) sublattice of the (Q,A,T) lattice.
class LatticeError : public Error {
 public:
  using Error::Error;
};

/// Text that should encode a polynomial, series or sequence is malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

class WeightMismatch : public Error {
 public:
  WeightMismatch(std::size_t left, std::size_t right)
      : Error("weight mismatch: |v| = " + std::to_string(left) +
              " but |w| = " + std::to_string(right)),
        left_(left),
        right_(right) {}

  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// Link parameters outside the supported domain (non-positive m, n or l).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Shuffled links need exactly one marked strand on each side.
class ColorError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class ReconstructionError : public Error {
 public:
  using Error::Error;
};

/// The fill bit passed to rotate() contradicts the rotation case.
class FillArgError : public Error {
 public:
  using Error::Error;
};

}  // namespace tlh
