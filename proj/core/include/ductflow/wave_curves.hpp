#pragma once

// Elementary-wave curves of the constant-area gas-dynamics system in the
// (u, p) plane, parameterized by pressure.
//
// Orientation: rarefaction_u, shock_state, shock_speed, lax_admissible and
// fan_state take the anchor as the LEFT state of the wave (R1/S1: p below /
// above the anchor; R3/S3: p above / below). The composite curves are
// oriented for the Riemann solver: w1 is anchored at the left state and
// returns right states, w3 is anchored at the right state and returns left
// states. Both composites are C^1 at the anchor pressure.

#include <string_view>

#include "ductflow/gas.hpp"

namespace ductflow {

enum class WaveFamily { R1, S1, J, S0, R3, S3, Vacuum };

std::string_view to_string(WaveFamily family) noexcept;

bool is_rarefaction(WaveFamily family) noexcept;
bool is_shock(WaveFamily family) noexcept;

/// Velocity on the R1 (p <= p_anchor) or R3 (p >= p_anchor) curve.
double rarefaction_u(double p, const GasState& anchor, WaveFamily family,
                     const GasConstants& gas);
/// Full state on the rarefaction curve; density follows the anchor
/// isentrope. p == 0 yields the vacuum state carrying the edge velocity.
GasState rarefaction_state(double p, const GasState& anchor, WaveFamily family,
                           const GasConstants& gas);

/// State on the S1 (p >= p_anchor) or S3 (p <= p_anchor) Hugoniot branch.
GasState shock_state(double p, const GasState& anchor, WaveFamily family,
                     const GasConstants& gas);

/// Shock speed from the mass relation written with the pressure jump:
/// u0 -/+ sqrt(rho [p] / (rho0 [rho])). Throws ContactNotShock for [rho] = 0.
double shock_speed(const GasState& anchor, const GasState& state, WaveFamily family);

/// lambda_i(state) < sigma_i < lambda_i(anchor). Equal states are rejected.
bool lax_admissible(const GasState& anchor, const GasState& state, WaveFamily family,
                    const GasConstants& gas);

/// Same u and p, density rho_new.
GasState contact_state(const GasState& anchor, double rho_new);

/// State inside a centered rarefaction at xi = x/t. The anchor is the
/// fan's left state; xi must lie inside the fan (R1: between the head
/// lambda_1(anchor) and the vacuum edge; R3: at or right of lambda_3).
GasState fan_state(double xi, const GasState& anchor, WaveFamily family,
                   const GasConstants& gas);

/// Unchecked fan evaluation from the across-fan Riemann invariant
/// (u + 2c/(gamma-1) for R1, u - 2c/(gamma-1) for R3) and kappa. Returns the
/// vacuum state when the sound speed would be nonpositive.
GasState fan_point(double xi, double riemann_invariant, double kappa_value,
                   WaveFamily family, double area, const GasConstants& gas);

/// Across-fan Riemann invariant of a 1- or 3-rarefaction through state.
double fan_invariant(const GasState& state, WaveFamily family, const GasConstants& gas);

/// Backward curve from the left state: R1 for p < p_left, S1 above.
double w1(double p, const GasState& left, const GasConstants& gas);
/// Forward curve into the right state: R3 for p < p_right, S3 above.
double w3(double p, const GasState& right, const GasConstants& gas);
double w1_slope(double p, const GasState& left, const GasConstants& gas);
double w3_slope(double p, const GasState& right, const GasConstants& gas);
GasState w1_state(double p, const GasState& left, const GasConstants& gas);
GasState w3_state(double p, const GasState& right, const GasConstants& gas);

/// u * p^(1/gamma) = const through reference.
double l_curve_u(double p, const GasState& reference, const GasConstants& gas);

/// Pressure at which the S1 speed from a D1 anchor vanishes (standing
/// normal shock).
double zero_speed_shock_pressure(const GasState& anchor, const GasConstants& gas);

struct RankineHugoniotResidual {
    double mass;
    double momentum;
    double energy;

    double max() const noexcept;
};

/// Residuals of -sigma[U] + [F(U)] for the constant-area gas equations,
/// each scaled by the magnitude of the terms involved.
RankineHugoniotResidual rankine_hugoniot_residual(const GasState& left, const GasState& right,
                                                  double sigma, const GasConstants& gas);

struct CurvePoint {
    GasState state;
    WaveFamily family;
    GasState anchor;
};

/// Scaled residual of the relation that defines the point's family through
/// its anchor (isentrope + invariant, Hugoniot, contact, stationary system).
double curve_residual(const CurvePoint& point, const GasConstants& gas);

}  // namespace ductflow
