#pragma once

#include <stdexcept>
#include <string>

namespace ionsim {

// A basis coordinate fell outside the truncated space.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A Fock-space truncation cannot represent the requested state to tolerance.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double deficit)
      : std::runtime_error(what), deficit_(deficit) {}
  double deficit() const noexcept { return deficit_; }

 private:
  double deficit_;
};

// A state component cannot be assigned to a closed four-level block without guessing.
class BlockAmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested effective dimension is smaller than the support of the density matrix.
class DimensionMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation precondition was violated (bad angle range, broken invariant, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File or stream level failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ionsim
