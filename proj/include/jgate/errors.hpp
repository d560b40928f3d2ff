#pragma once

#include <stdexcept>
#include <string>

namespace jgate {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotUnimodular : public Error {
 public:
  explicit NotUnimodular(double det_re, double det_im);
  double det_re() const noexcept { return det_re_; }
  double det_im() const noexcept { return det_im_; }

 private:
  double det_re_;
  double det_im_;
};

class NonFiniteEntry : public Error {
 public:
  NonFiniteEntry() : Error("matrix entry is not finite") {}
};

class IsIdentity : public Error {
 public:
  IsIdentity() : Error("matrix acts as the identity; every point is fixed") {}
};

class NotLoxodromic : public Error {
 public:
  NotLoxodromic() : Error("matrix is not loxodromic") {}
};

class ZeroLambda : public Error {
 public:
  ZeroLambda() : Error("lambda must be nonzero") {}
};

class MgOutOfRange : public Error {
 public:
  explicit MgOutOfRange(double mg);
  double mg() const noexcept { return mg_; }

 private:
  double mg_;
};

class LambdaNotExpanding : public Error {
 public:
  LambdaNotExpanding() : Error("|lambda| must be greater than 1") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace jgate
