#pragma once

// Stationary (zero-speed) waves across a cross-section jump. Across such a
// wave the mass flux a rho u, the Bernoulli invariant u^2/2 + c^2/(gamma-1)
// and kappa are conserved.

#include "ductflow/gas.hpp"

namespace ductflow {

/// The two roots of the stationary system for one target cross-section.
/// When the target equals a_min the roots coincide at the sonic state and
/// `coincident` is set.
struct StationaryPair {
    GasState supersonic;
    GasState subsonic;
    double target_a = 0.0;
    bool coincident = false;
};

enum class BranchSelector { Supersonic, Subsonic, FromAnchorRegion };

/// Sonic density of the anchor's stationary family.
double rho_m(const GasState& anchor, const GasConstants& gas);

/// Smallest cross-section reachable from anchor by a stationary wave.
/// Zero for an anchor at rest.
double a_min(const GasState& anchor, const GasConstants& gas);

/// Relative band (of the anchor's area) inside which a target area counts as
/// a_min itself.
inline constexpr double kCoincidenceTolerance = 1e-9;

/// Both roots of the stationary system for a_target. Throws
/// NoStationarySolution when a_target < a_min. An anchor at rest continues
/// trivially (same rho and p, new area) on both branches.
StationaryPair stationary_jump(const GasState& anchor, double a_target, const GasConstants& gas);

/// The root that stays in the closure of the anchor's domain (global entropy
/// condition). Throws AmbiguousBranch for a sonic anchor unless the roots
/// coincide.
GasState admissible_stationary(const GasState& anchor, double a_target, const GasConstants& gas);

GasState select_branch(const StationaryPair& pair, BranchSelector selector,
                       const GasState& anchor, const GasConstants& gas);

/// Relative residuals of the three stationary relations between two states.
struct StationaryResidual {
    double mass;
    double bernoulli;
    double kappa;

    double max() const noexcept;
};

StationaryResidual stationary_residual(const GasState& from, const GasState& to,
                                       const GasConstants& gas);

/// True when both states lie in the closure of a single domain D1..D4.
bool same_domain_closure(const GasState& lhs, const GasState& rhs, const GasConstants& gas,
                         double tol = 1e-7);

}  // namespace ductflow
