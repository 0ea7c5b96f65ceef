#pragma once

#include <stdexcept>
#include <string>

namespace uavgame {

/// Base class for all errors raised by this library. `name()` is the stable
/// machine-readable identifier the CLI prints on failure.
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

/// An argument fell outside the mathematical domain of an operation
/// (e.g. a beacon duration outside [0, T]).
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

class IndexOutOfRange : public Error {
  public:
    explicit IndexOutOfRange(const std::string& msg) : Error("IndexOutOfRange", msg) {}
};

/// Adaptive quadrature hit its subdivision cap before reaching tolerance.
class QuadratureNonConvergence : public Error {
  public:
    explicit QuadratureNonConvergence(const std::string& msg)
        : Error("QuadratureNonConvergence", msg) {}
};

/// A derivative probe was requested too close to the strategy-box boundary
/// for the central stencil to fit.
class BoundaryPoint : public Error {
  public:
    explicit BoundaryPoint(const std::string& msg) : Error("BoundaryPoint", msg) {}
};

/// The net-gain factor multiplying the service-probability curvature is too
/// close to zero for the factorization cross-check to be meaningful.
class FactorNearZero : public Error {
  public:
    explicit FactorNearZero(const std::string& msg) : Error("FactorNearZero", msg) {}
};

}  // namespace uavgame
