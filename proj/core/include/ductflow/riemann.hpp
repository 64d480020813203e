#pragma once

// Exact Riemann solvers: the classical constant-area solver and the duct
// solver with a cross-section jump at x = 0.

#include <optional>
#include <string>
#include <vector>

#include "ductflow/gas.hpp"
#include "ductflow/wave_curves.hpp"

namespace ductflow {

/// One elementary wave of a self-similar fan. Shocks, contacts and
/// stationary waves have speed_lo == speed_hi.
struct Wave {
    WaveFamily family;
    GasState left;
    GasState right;
    double speed_lo;
    double speed_hi;
};

struct VacuumWedge {
    double lo;
    double hi;
};

/// How a fan was assembled.
enum class FanOrigin {
    Classical,       ///< constant-area W1/W3 intersection
    StationaryFirst, ///< stationary jump at the left state, then classical waves
    WaveFirst,       ///< 1-wave, subsonic stationary jump, contact, 3-wave
    SonicAttached,   ///< R1 to the sonic point, supersonic jump, classical waves
    Resonant,        ///< jump, zero-speed 1-shock, jump, contact, 3-wave
};

std::string_view to_string(FanOrigin origin) noexcept;

/// Ordered waves plus the constant states between them:
/// states[i] is left of waves[i], states[i + 1] right of it.
struct WaveFan {
    std::vector<Wave> waves;
    std::vector<GasState> states;
    std::optional<VacuumWedge> vacuum;
    FanOrigin origin = FanOrigin::Classical;
    /// Built by reflecting (x -> -x, u -> -u) a fan of the mirrored problem.
    bool mirrored = false;

    const GasState& leftmost() const { return states.front(); }
    const GasState& rightmost() const { return states.back(); }
    /// Space-separated family tokens, e.g. "S0 R1 J R3".
    std::string pattern() const;
    std::vector<WaveFamily> families() const;
};

struct DuctRiemannSolutions {
    std::vector<WaveFan> solutions;
    std::string multiplicity_note;
};

struct StarRegion {
    double p;
    double u;
    int iterations;
};

/// Pressure and velocity between the 1- and 3-waves of a constant-area
/// problem, by safeguarded Newton on w1(p; left) - w3(p; right). Returns
/// nullopt when the two rarefactions separate into vacuum.
std::optional<StarRegion> star_region(const GasState& left, const GasState& right,
                                      const GasConstants& gas);

/// u_left + 2 c_left/(gamma-1) <= u_right - 2 c_right/(gamma-1).
bool generates_vacuum(const GasState& left, const GasState& right, const GasConstants& gas);

WaveFan solve_constant_area(const GasState& left, const GasState& right, const GasConstants& gas);

/// State at xi = x/t. Right-continuous: on a discontinuity (including a
/// stationary wave at xi = 0) the right state is returned. Inside a vacuum
/// wedge the vacuum state is returned.
GasState sample(const WaveFan& fan, double xi, const GasConstants& gas);

/// Residual of a wave's defining relation (RH, isentrope, contact,
/// stationary system) plus the Lax check for shocks.
double wave_residual(const Wave& wave, const GasConstants& gas);
bool speeds_monotone(const WaveFan& fan, double tol = 1e-10);
/// Every stationary wave's two sides lie in one domain closure.
bool stationary_waves_admissible(const WaveFan& fan, const GasConstants& gas);

/// Monotone speeds, same-domain stationary waves, every wave residual
/// below 1e-8 and Lax-admissible shocks.
bool fan_admissible(const WaveFan& fan, const GasConstants& gas);

/// Reflect a fan through x -> -x, u -> -u.
WaveFan mirror(const WaveFan& fan);
GasState mirror(const GasState& state) noexcept;

enum class DuctConfiguration { StationaryFirst, WaveFirst, SonicAttached, Resonant };

/// Scan resolution for the one-parameter closures of WaveFirst and Resonant.
inline constexpr int kClosureScanPoints = 400;

/// Fans of one configuration for left (area a_left) | right (area a_right).
/// Configurations are built for flow toward the jump from the left (u > 0
/// near x = 0); solve_duct covers the reflected case.
std::vector<WaveFan> duct_fans(DuctConfiguration configuration, const GasState& left,
                               double a_left, const GasState& right, double a_right,
                               const GasConstants& gas);

/// All admissible fans from the implemented configurations, direct and
/// reflected. Equal areas reduce to solve_constant_area. Throws NoSolution.
DuctRiemannSolutions solve_duct(const GasState& left, double a_left, const GasState& right,
                                double a_right, const GasConstants& gas);

}  // namespace ductflow
