#include "ductflow/gas.hpp"

#include <cmath>
#include <string>

#include "ductflow/errors.hpp"

namespace ductflow {

GasConstants::GasConstants(double gamma) : gamma_(gamma) {
    if (!(gamma > 1.0 && gamma < 3.0)) {
        throw DomainError("gamma must lie in (1, 3), got " + std::to_string(gamma));
    }
}

double GasState::tau() const {
    require_physical(*this);
    return 1.0 / rho;
}

void require_physical(const GasState& state, std::string_view what) {
    const bool ok = std::isfinite(state.rho) && std::isfinite(state.u) &&
                    std::isfinite(state.p) && std::isfinite(state.a) && state.rho > 0.0 &&
                    state.p > 0.0 && state.a > 0.0;
    if (!ok) {
        throw DomainError(std::string(what) + ": expected rho, p, a > 0 (rho = " +
                          std::to_string(state.rho) + ", p = " + std::to_string(state.p) +
                          ", a = " + std::to_string(state.a) + ")");
    }
}

double sound_speed(const GasState& state, const GasConstants& gas) {
    require_physical(state);
    return std::sqrt(gas.gamma() * state.p / state.rho);
}

double kappa(const GasState& state, const GasConstants& gas) {
    require_physical(state);
    return state.p / std::pow(state.rho, gas.gamma());
}

double internal_energy(const GasState& state, const GasConstants& gas) {
    require_physical(state);
    return state.p / ((gas.gamma() - 1.0) * state.rho);
}

double total_energy(const GasState& state, const GasConstants& gas) {
    return internal_energy(state, gas) + 0.5 * state.u * state.u;
}

double mach(const GasState& state, const GasConstants& gas) {
    return state.u / sound_speed(state, gas);
}

Eigenvalues eigenvalues(const GasState& state, const GasConstants& gas) {
    const double c = sound_speed(state, gas);
    return {state.u - c, state.u, state.u + c, 0.0};
}

double genuine_nonlinearity(const GasState& state, const GasConstants& gas) {
    const double g = gas.gamma();
    const double k = kappa(state, gas);
    const double dp = g * k * std::pow(state.rho, g - 1.0);
    const double d2p = g * (g - 1.0) * k * std::pow(state.rho, g - 2.0);
    return (state.rho * d2p + 2.0 * dp) / (2.0 * std::sqrt(dp));
}

double sonic_velocity(double p, double kappa_value, const GasConstants& gas) {
    const double g = gas.gamma();
    return std::sqrt(g * std::pow(kappa_value, 1.0 / g)) * std::pow(p, (g - 1.0) / (2.0 * g));
}

std::string_view to_string(Region region) noexcept {
    switch (region) {
        case Region::D1: return "D1";
        case Region::D2: return "D2";
        case Region::D3: return "D3";
        case Region::D4: return "D4";
        case Region::GammaPlus: return "Gamma+";
        case Region::GammaMinus: return "Gamma-";
        case Region::Gamma0: return "Gamma0";
    }
    return "?";
}

Region classify_region(const GasState& state, const GasConstants& gas, double tol) {
    const double c = sound_speed(state, gas);
    const double band = tol * (std::abs(state.u) + c);
    if (std::abs(state.u) <= band) return Region::Gamma0;
    const double excess = std::abs(state.u) - c;
    if (std::abs(excess) <= band) {
        return state.u > 0.0 ? Region::GammaPlus : Region::GammaMinus;
    }
    if (state.u > 0.0) return excess > 0.0 ? Region::D1 : Region::D2;
    return excess > 0.0 ? Region::D4 : Region::D3;
}

bool is_supersonic(Region region) noexcept {
    return region == Region::D1 || region == Region::D4;
}

bool is_subsonic(Region region) noexcept {
    return region == Region::D2 || region == Region::D3;
}

GasState primitive_from_conserved(const ConservedCell& cell, const GasConstants& gas) {
    const double rho = cell.m / cell.a;
    if (!(cell.m > 0.0) || !(cell.a > 0.0) || !std::isfinite(rho)) {
        throw NonPhysicalCell(0, 0.0, rho, 0.0);
    }
    const double u = cell.q / cell.m;
    const double p = (gas.gamma() - 1.0) * (cell.en / cell.a - 0.5 * rho * u * u);
    if (!(p > 0.0) || !std::isfinite(p)) throw NonPhysicalCell(0, 0.0, rho, p);
    return GasState{rho, u, p, cell.a};
}

ConservedCell conserved_from_primitive(const GasState& state, const GasConstants& gas) {
    require_physical(state);
    const double energy = state.p / (gas.gamma() - 1.0) + 0.5 * state.rho * state.u * state.u;
    return ConservedCell{state.a * state.rho, state.a * state.rho * state.u, state.a * energy,
                         state.a};
}

}  // namespace ductflow
