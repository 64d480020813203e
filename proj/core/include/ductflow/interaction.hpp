#pragma once

// Interaction of a contact J(Um, U-) travelling into a stationary wave
// S0(U+, Um) sitting on a cross-section jump a0 -> a1.

#include <string>
#include <string_view>
#include <vector>

#include "ductflow/gas.hpp"
#include "ductflow/riemann.hpp"
#include "ductflow/stationary.hpp"

namespace ductflow {

struct InteractionInput {
    GasState u_minus;  ///< left of the contact, area a0
    GasState u_m;      ///< between contact and jump, area a0
    GasState u_plus;   ///< right of the jump, area a1
    double a0 = 1.0;
    double a1 = 1.0;
};

struct ValidationReport {
    double j_velocity = 0.0;  ///< |u- - um| relative
    double j_pressure = 0.0;  ///< |p- - pm| relative
    bool densities_distinct = true;
    StationaryResidual s0{};  ///< Um -> U+ across the jump
    bool s0_flagged = false;
    double tol = 1e-3;
};

/// Throws InvalidInput when the contact relations fail beyond tol or the
/// densities coincide; an inexact stationary triple is only flagged.
ValidationReport validate_input(const InteractionInput& inp, const GasConstants& gas,
                                double tol = 1e-3);

enum class InteractionCase { Case1, Case1Vacuum, Case2, Transonic2, Case3, Case4, Transonic4 };

std::string_view to_string(InteractionCase c) noexcept;

/// Split on the regimes of Um and U- and on rho- vs rhom. Sonic Um or U-
/// (within kRegionTolerance) throws AmbiguousClassification.
InteractionCase classify(const InteractionInput& inp, const GasConstants& gas);

struct InteractionResult {
    InteractionCase tag;
    std::vector<WaveFan> fans;  ///< more than one only for Transonic4
    std::string notes;
};

/// Post-interaction fans centred at the jump. Throws NoResolution when the
/// case's construction has no admissible closure.
InteractionResult resolve(const InteractionInput& inp, const GasConstants& gas);

/// (u_right - 2c_right/(gamma-1)) - (u_left + 2c_left/(gamma-1)); vacuum iff >= 0.
double vacuum_gap(const GasState& left_edge, const GasState& right_edge, const GasConstants& gas);

/// Contact hits the jump at this time when it starts at x1 and the jump sits at x2.
double touch_time(const InteractionInput& inp, double x1, double x2);

/// Exact solution of the three-state problem: the initial layout carried
/// by the moving contact until it reaches x2, the post-interaction fan
/// centred at (x2, touch time) afterwards.
GasState sample_interaction(const WaveFan& fan, const InteractionInput& inp, double x1, double x2,
                            double x, double t, const GasConstants& gas);

}  // namespace ductflow
