// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ltoeplitz {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A character uses coordinates the group does not have.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A group point, group spec or symbol of incompatible kinds were combined.
class VariantMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two distinct characters have real images closer than the guard tolerance.
class OrderTie : public Error {
 public:
  using Error::Error;
};

/// The hypotheses of a closed-form result are not met.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A symbol sample fell below the vanishing threshold.
class SymbolVanishes : public Error {
 public:
  using Error::Error;
};

/// Argument tracking could not resolve a winding even at the finest grid.
class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree produced different answers.
class NumericalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace ltoeplitz
