#pragma once

#include <stdexcept>
#include <string>

namespace mcshane {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Seed does not define a hyperbolic surface (e.g. Z <= 2).
class InvalidSeed : public std::invalid_argument {
  public:
    explicit InvalidSeed(const std::string& what) : std::invalid_argument(what) {}
};

/// Complex seed with Re(l_gamma) = 0: the two-sided element is not loxodromic,
/// so the series has no certified convergence.
class LoxodromicViolation : public std::invalid_argument {
  public:
    explicit LoxodromicViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A coefficient of the general solution vanishes; the exponential growth
/// envelope does not apply.
class DegenerateCoefficient : public std::invalid_argument {
  public:
    explicit DegenerateCoefficient(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested tolerance could not be certified before hitting term/overflow limits.
class NoConvergence : public std::runtime_error {
  public:
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A traced arc passed within the degeneracy guard of a polygon vertex;
/// the caller should resample the launch point.
class DegenerateShot : public std::runtime_error {
  public:
    explicit DegenerateShot(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mcshane
