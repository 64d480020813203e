#include "ductflow/stationary.hpp"

#include <algorithm>
#include <cmath>

#include "ductflow/errors.hpp"

namespace ductflow {

namespace {

// Stationary family through one anchor, reduced to the density.
struct Family {
    double gamma;
    double kappa;
    double bernoulli;  // u^2/2 + gamma kappa rho^(gamma-1) / (gamma-1)
    double flux;       // |a rho u|
    double sign;       // sign of u

    double enthalpy(double rho) const {
        return gamma * kappa * std::pow(rho, gamma - 1.0) / (gamma - 1.0);
    }
    double speed(double rho) const { return std::sqrt(std::max(0.0, 2.0 * (bernoulli - enthalpy(rho)))); }
    double max_density() const {
        return std::pow((gamma - 1.0) * bernoulli / (gamma * kappa), 1.0 / (gamma - 1.0));
    }
};

Family family_of(const GasState& anchor, const GasConstants& gas) {
    const double g = gas.gamma();
    const double k = kappa(anchor, gas);
    Family f{g, k, 0.0, std::abs(anchor.a * anchor.rho * anchor.u), anchor.u < 0.0 ? -1.0 : 1.0};
    f.bernoulli = 0.5 * anchor.u * anchor.u + f.enthalpy(anchor.rho);
    return f;
}

GasState state_at(const Family& f, double rho, double area) {
    return GasState{rho, f.sign * f.flux / (area * rho), f.kappa * std::pow(rho, f.gamma), area};
}

// Root of area * rho * |u(rho)| - flux inside [lo, hi], where the residual
// changes sign across the bracket.
double solve_branch(const Family& f, double area, double lo, double hi) {
    const auto residual = [&](double rho) { return area * rho * f.speed(rho) - f.flux; };
    double r_lo = residual(lo);
    const double width_tol = 1e-13 * hi;
    for (int it = 0; it < 200 && hi - lo > width_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r_mid = residual(mid);
        if (r_mid == 0.0) return mid;
        if ((r_mid < 0.0) == (r_lo < 0.0)) {
            lo = mid;
            r_lo = r_mid;
        } else {
            hi = mid;
        }
    }
    double rho = 0.5 * (lo + hi);
    // Newton polish: d(rho |u|)/drho = (u^2 - c^2) / |u|.
    for (int it = 0; it < 2; ++it) {
        const double u = f.speed(rho);
        if (u <= 0.0) break;
        const double c2 = f.gamma * f.kappa * std::pow(rho, f.gamma - 1.0);
        const double slope = area * (u * u - c2) / u;
        if (slope == 0.0) break;
        const double next = rho - residual(rho) / slope;
        if (!(next > 0.0) || std::abs(residual(next)) > std::abs(residual(rho))) break;
        rho = next;
    }
    return rho;
}

}  // namespace

double rho_m(const GasState& anchor, const GasConstants& gas) {
    const double g = gas.gamma();
    const double k = kappa(anchor, gas);
    const double base = (g - 1.0) / (k * g * (g + 1.0)) * anchor.u * anchor.u +
                        2.0 / (g + 1.0) * std::pow(anchor.rho, g - 1.0);
    return std::pow(base, 1.0 / (g - 1.0));
}

double a_min(const GasState& anchor, const GasConstants& gas) {
    require_physical(anchor, "stationary anchor");
    if (anchor.u == 0.0) return 0.0;
    const double g = gas.gamma();
    const double k = kappa(anchor, gas);
    const double rm = rho_m(anchor, gas);
    return anchor.a * anchor.rho * std::abs(anchor.u) /
           (std::sqrt(k * g) * std::pow(rm, (g + 1.0) / 2.0));
}

StationaryPair stationary_jump(const GasState& anchor, double a_target, const GasConstants& gas) {
    require_physical(anchor, "stationary anchor");
    if (!(a_target > 0.0) || !std::isfinite(a_target)) {
        throw DomainError("stationary_jump: target cross-section must be positive");
    }
    if (anchor.u == 0.0) {
        const GasState same = anchor.with_area(a_target);
        return {same, same, a_target, false};
    }

    const double amin = a_min(anchor, gas);
    const Family f = family_of(anchor, gas);
    const double rm = rho_m(anchor, gas);

    if (std::abs(a_target - amin) <= kCoincidenceTolerance * anchor.a) {
        const GasState sonic = state_at(f, rm, a_target);
        return {sonic, sonic, a_target, true};
    }
    if (a_target < amin) throw NoStationarySolution(a_target, amin);

    StationaryPair pair{anchor, anchor, a_target, false};
    const Region region = classify_region(anchor, gas);
    const bool identity = a_target == anchor.a;
    if (identity && is_supersonic(region)) {
        pair.supersonic = anchor;
    } else {
        pair.supersonic = state_at(f, solve_branch(f, a_target, 0.0, rm), a_target);
    }
    if (identity && is_subsonic(region)) {
        pair.subsonic = anchor;
    } else {
        pair.subsonic = state_at(f, solve_branch(f, a_target, rm, f.max_density()), a_target);
    }
    return pair;
}

GasState select_branch(const StationaryPair& pair, BranchSelector selector,
                       const GasState& anchor, const GasConstants& gas) {
    switch (selector) {
        case BranchSelector::Supersonic: return pair.supersonic;
        case BranchSelector::Subsonic: return pair.subsonic;
        case BranchSelector::FromAnchorRegion: break;
    }
    if (pair.coincident) return pair.supersonic;
    const Region region = classify_region(anchor, gas);
    if (region == Region::Gamma0) return pair.subsonic;
    if (is_supersonic(region)) return pair.supersonic;
    if (is_subsonic(region)) return pair.subsonic;
    throw AmbiguousBranch("sonic anchor: both stationary branches are admissible");
}

GasState admissible_stationary(const GasState& anchor, double a_target, const GasConstants& gas) {
    const StationaryPair pair = stationary_jump(anchor, a_target, gas);
    return select_branch(pair, BranchSelector::FromAnchorRegion, anchor, gas);
}

double StationaryResidual::max() const noexcept { return std::max({mass, bernoulli, kappa}); }

StationaryResidual stationary_residual(const GasState& from, const GasState& to,
                                       const GasConstants& gas) {
    const double g = gas.gamma();
    const double m0 = from.a * from.rho * from.u;
    const double m1 = to.a * to.rho * to.u;
    const double c0 = sound_speed(from, gas);
    const double c1 = sound_speed(to, gas);
    const double b0 = 0.5 * from.u * from.u + c0 * c0 / (g - 1.0);
    const double b1 = 0.5 * to.u * to.u + c1 * c1 / (g - 1.0);
    const double k0 = kappa(from, gas);
    const double k1 = kappa(to, gas);
    const double mass_scale = std::max(std::abs(m0), from.a * from.rho * c0);
    return {std::abs(m1 - m0) / mass_scale, std::abs(b1 - b0) / std::abs(b0),
            std::abs(k1 - k0) / k0};
}

bool same_domain_closure(const GasState& lhs, const GasState& rhs, const GasConstants& gas,
                         double tol) {
    // Closure of Di, expressed on (u, |u| - c) with a relative band.
    const auto in_closure = [&](const GasState& s, int domain) {
        const double c = sound_speed(s, gas);
        const double band = tol * (std::abs(s.u) + c);
        switch (domain) {
            case 1: return s.u - c >= -band;
            case 2: return s.u >= -band && s.u - c <= band;
            case 3: return s.u <= band && s.u + c >= -band;
            default: return s.u + c <= band;
        }
    };
    for (int d = 1; d <= 4; ++d) {
        if (in_closure(lhs, d) && in_closure(rhs, d)) return true;
    }
    return false;
}

}  // namespace ductflow
