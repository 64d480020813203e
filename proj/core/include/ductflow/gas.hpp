#pragma once

// Equation of state p = kappa * rho^gamma, primitive/conserved conversion,
// characteristic speeds and the D1..D4 region split of state space.

#include <string_view>

namespace ductflow {

/// Adiabatic exponent of the gamma-law gas, 1 < gamma < 3.
class GasConstants {
public:
    explicit GasConstants(double gamma);

    double gamma() const noexcept { return gamma_; }
    /// mu^2 = (gamma - 1) / (gamma + 1), the Hugoniot coefficient.
    double mu2() const noexcept { return (gamma_ - 1.0) / (gamma_ + 1.0); }

private:
    double gamma_;
};

/// Primitive duct state. A vacuum state has rho = p = 0 and carries the
/// velocity of the rarefaction edge that bounds it.
struct GasState {
    double rho = 0.0;
    double u = 0.0;
    double p = 0.0;
    double a = 1.0;

    static GasState vacuum(double edge_velocity, double area) noexcept {
        return GasState{0.0, edge_velocity, 0.0, area};
    }

    bool is_vacuum() const noexcept { return rho == 0.0 && p == 0.0; }
    double tau() const;

    /// Copy with a different cross-section.
    GasState with_area(double area) const noexcept {
        GasState s = *this;
        s.a = area;
        return s;
    }

    friend bool operator==(const GasState&, const GasState&) = default;
};

/// Throws DomainError unless rho, p, a are positive and finite.
void require_physical(const GasState& state, std::string_view what = "state");

double sound_speed(const GasState& state, const GasConstants& gas);
/// Entropy variable p / rho^gamma.
double kappa(const GasState& state, const GasConstants& gas);
double internal_energy(const GasState& state, const GasConstants& gas);
double total_energy(const GasState& state, const GasConstants& gas);
double mach(const GasState& state, const GasConstants& gas);

struct Eigenvalues {
    double l1;
    double l2;
    double l3;
    double l4;
};

/// (u - c, u, u + c, 0).
Eigenvalues eigenvalues(const GasState& state, const GasConstants& gas);

/// (rho p''(rho) + 2 p'(rho)) / (2 sqrt(p'(rho))) for p = kappa rho^gamma;
/// positive for every physical state.
double genuine_nonlinearity(const GasState& state, const GasConstants& gas);

/// Velocity on the sonic surface Gamma+ at pressure p for the given kappa.
double sonic_velocity(double p, double kappa_value, const GasConstants& gas);

enum class Region { D1, D2, D3, D4, GammaPlus, GammaMinus, Gamma0 };

std::string_view to_string(Region region) noexcept;

/// Relative band used to map |u| - c and u onto the sonic surfaces.
inline constexpr double kRegionTolerance = 1e-9;

/// Boundary tags are returned when |u| - c (or u) is within
/// tol * (|u| + c) of zero.
Region classify_region(const GasState& state, const GasConstants& gas,
                       double tol = kRegionTolerance);

/// True for D1, D4 and for D2, D3 respectively; boundaries are neither.
bool is_supersonic(Region region) noexcept;
bool is_subsonic(Region region) noexcept;

/// Area-weighted conserved variables (a rho, a rho u, a rho E) plus the
/// cell's cross-section.
struct ConservedCell {
    double m = 0.0;
    double q = 0.0;
    double en = 0.0;
    double a = 1.0;
};

/// Throws NonPhysicalCell (index 0, time 0) for nonpositive density or
/// pressure.
GasState primitive_from_conserved(const ConservedCell& cell, const GasConstants& gas);
ConservedCell conserved_from_primitive(const GasState& state, const GasConstants& gas);

}  // namespace ductflow
