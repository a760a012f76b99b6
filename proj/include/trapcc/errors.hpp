#pragma once

#include <stdexcept>
#include <string>

namespace trapcc {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the supported domain (alpha, beta, dt, ranges...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// m + M == 0, or a non-positive mass where strictly positive masses are needed.
class DegenerateMasses : public Error {
 public:
  using Error::Error;
};

// The common denominator f3 of the closed-form masses vanishes.
class DegenerateConfiguration : public Error {
 public:
  DegenerateConfiguration(const std::string& what, double f3)
      : Error(what), f3_(f3) {}
  double f3() const { return f3_; }

 private:
  double f3_;
};

// The 2x2 reduced CC system has a (relatively) vanishing determinant.
class SingularSystem : public Error {
 public:
  SingularSystem(const std::string& what, double determinant)
      : Error(what), determinant_(determinant) {}
  double determinant() const { return determinant_; }

 private:
  double determinant_;
};

class CoincidentBodies : public Error {
 public:
  using Error::Error;
};

class ZeroTotalMass : public Error {
 public:
  using Error::Error;
};

// Two bodies came closer than the integrator's collision tolerance.
class CollisionError : public Error {
 public:
  using Error::Error;
};

// Refusal to set up dynamics for parameters without two positive masses.
class UnphysicalParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace trapcc
