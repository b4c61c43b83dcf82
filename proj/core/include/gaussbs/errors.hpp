#pragma once

#include <stdexcept>
#include <string>

namespace gaussbs {

// A requested state violates the single-mode uncertainty bound a^2 >= |b|^2 + 1/4,
// or a two-mode matrix fails the symplectic physicality check.
class UnphysicalState : public std::runtime_error {
 public:
  explicit UnphysicalState(const std::string& what) : std::runtime_error(what) {}
};

// A 4x4 matrix does not have the structure of a two-mode complex-amplitude
// covariance (non-Hermitian, broken conjugation symmetry, or a negative
// radicand far beyond rounding noise in the negativity formula).
class InvalidCovariance : public std::runtime_error {
 public:
  explicit InvalidCovariance(const std::string& what) : std::runtime_error(what) {}
};

// An eigenvalue that must be strictly positive is zero or negative.
class DegenerateEigenvalue : public std::runtime_error {
 public:
  explicit DegenerateEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

// The C-constant denominator vanishes (equal minimum eigenvalues); the
// associated identity degenerates to 0 = 0 and the constant is undefined.
class DegenerateCase : public std::runtime_error {
 public:
  explicit DegenerateCase(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gaussbs
