#pragma once

// First-order Rusanov finite-volume scheme for duct flow with a piecewise
// constant cross-section and the nonconservative p a_x momentum source.

#include <cstddef>
#include <vector>

#include "ductflow/gas.hpp"

namespace ductflow {

/// U = left on x < x1, middle on x1 < x < x2, right on x > x2. The
/// cross-section follows the states: left.a == middle.a, jumping at x2.
struct ThreeStateInit {
    double x1 = 2.9;
    double x2 = 3.0;
    GasState left;
    GasState middle;
    GasState right;
};

struct SimConfig {
    double x_lo = 0.0;
    double x_hi = 10.0;
    int cells = 2000;
    double cfl = 0.75;
    double t_end = 0.0;
    double gamma = 2.0;
    ThreeStateInit initial;

    /// Throws InvalidInput naming the offending field.
    void validate() const;
    double dx() const { return (x_hi - x_lo) / cells; }
};

struct Flux {
    double mass = 0.0;
    double momentum = 0.0;
    double energy = 0.0;
};

struct SimGrid {
    std::vector<ConservedCell> cells;
    double dx = 0.0;
    double x_lo = 0.0;
    double t = 0.0;
    std::size_t steps = 0;

    double center(std::size_t i) const { return x_lo + (static_cast<double>(i) + 0.5) * dx; }
};

/// (a rho u, a (rho u^2 + p), a u (rho E + p)).
Flux physical_flux(const GasState& state, const GasConstants& gas);

/// Central flux minus S (V_r - V_l) / 2 with S the largest |u -+ c| of the
/// two cells.
Flux rusanov_flux(const ConservedCell& left, const ConservedCell& right, const GasConstants& gas);

/// dt p (a_right - a_left) / (2 dx). step() passes the cross-sections of
/// the two neighbours of the cell, a central difference of a over the cell.
double source_increment(double p_cell, double a_left, double a_right, double dx, double dt);

/// cfl dx / max_i (|u_i| + c_i).
double stable_time_step(const SimGrid& grid, double cfl, const GasConstants& gas);

/// Cells i < round((x1 - x_lo)/dx) take the left state, cells below
/// round((x2 - x_lo)/dx) the middle state, the rest the right state.
SimGrid initial_grid(const SimConfig& cfg, const GasConstants& gas);

/// One forward-Euler step with transmissive ghost cells, clipped to land
/// on cfg.t_end. Throws NonPhysicalCell with the cell index and new time.
SimGrid step(const SimGrid& grid, const SimConfig& cfg, const GasConstants& gas);

SimGrid run(const SimConfig& cfg, const GasConstants& gas);

std::vector<GasState> primitives(const SimGrid& grid, const GasConstants& gas);

}  // namespace ductflow
