#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ductflow {

/// Input outside the domain of a formula (vacuum where a state is needed,
/// wrong side of a one-sided curve, fan coordinate outside the fan).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Shock speed requested for two states with equal density.
class ContactNotShock : public DomainError {
public:
    using DomainError::DomainError;
};

/// Contact requested with the anchor's own density.
class DegenerateContact : public DomainError {
public:
    using DomainError::DomainError;
};

/// The stationary-wave system has no root: the target cross-section lies
/// below the minimum reachable from the anchor.
class NoStationarySolution : public std::runtime_error {
public:
    NoStationarySolution(double a_target, double a_min);
    double a_target() const noexcept { return a_target_; }
    double a_min() const noexcept { return a_min_; }

private:
    double a_target_;
    double a_min_;
};

/// A sonic anchor admits both stationary branches; the caller must pick one.
class AmbiguousBranch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No admissible duct Riemann solution among the implemented configurations.
class NoSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AmbiguousClassification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoResolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite-volume cell (or a conserved triple) with nonpositive density or
/// pressure.
class NonPhysicalCell : public std::runtime_error {
public:
    NonPhysicalCell(std::size_t index, double time, double rho, double p);
    std::size_t index() const noexcept { return index_; }
    double time() const noexcept { return time_; }
    double rho() const noexcept { return rho_; }
    double pressure() const noexcept { return p_; }

private:
    std::size_t index_;
    double time_;
    double rho_;
    double p_;
};

}  // namespace ductflow
