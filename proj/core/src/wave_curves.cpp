#include "ductflow/wave_curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ductflow/errors.hpp"
#include "ductflow/stationary.hpp"

namespace ductflow {

namespace {

double sound_speed_on_isentrope(double p, double kappa_value, const GasConstants& gas) {
    // c = sqrt(gamma kappa^(1/gamma)) p^((gamma-1)/(2 gamma))
    return sonic_velocity(p, kappa_value, gas);
}

double isentrope_density(double p, double kappa_value, const GasConstants& gas) {
    return std::pow(p / kappa_value, 1.0 / gas.gamma());
}

double hugoniot_tau(double p, const GasState& anchor, const GasConstants& gas) {
    const double m2 = gas.mu2();
    return (1.0 / anchor.rho) * (m2 * p + anchor.p) / (p + m2 * anchor.p);
}

// Magnitude of the velocity jump along the Hugoniot locus through anchor.
double hugoniot_du(double p, const GasState& anchor, const GasConstants& gas) {
    const double m2 = gas.mu2();
    return (p - anchor.p) * std::sqrt((1.0 - m2) / anchor.rho / (p + m2 * anchor.p));
}

double hugoniot_du_slope(double p, const GasState& anchor, const GasConstants& gas) {
    const double m2 = gas.mu2();
    const double denom = p + m2 * anchor.p;
    const double root = std::sqrt((1.0 - m2) / anchor.rho / denom);
    return root * (1.0 - 0.5 * (p - anchor.p) / denom);
}

// Velocity change along the isentrope through anchor, 2/(gamma-1) (c - c0).
double isentrope_du(double p, const GasState& anchor, const GasConstants& gas) {
    const double k = kappa(anchor, gas);
    const double c0 = sound_speed(anchor, gas);
    const double c = sound_speed_on_isentrope(p, k, gas);
    return 2.0 / (gas.gamma() - 1.0) * (c - c0);
}

double isentrope_du_slope(double p, const GasState& anchor, const GasConstants& gas) {
    // d/dp of the above is 1 / (rho c) on the isentrope.
    const double k = kappa(anchor, gas);
    const double rho = isentrope_density(p, k, gas);
    return 1.0 / (rho * sound_speed_on_isentrope(p, k, gas));
}

void require_pressure(double p) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw DomainError("pressure must be finite and nonnegative, got " + std::to_string(p));
    }
}

double scale_of(double a, double b) { return std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

std::string_view to_string(WaveFamily family) noexcept {
    switch (family) {
        case WaveFamily::R1: return "R1";
        case WaveFamily::S1: return "S1";
        case WaveFamily::J: return "J";
        case WaveFamily::S0: return "S0";
        case WaveFamily::R3: return "R3";
        case WaveFamily::S3: return "S3";
        case WaveFamily::Vacuum: return "Vac";
    }
    return "?";
}

bool is_rarefaction(WaveFamily family) noexcept {
    return family == WaveFamily::R1 || family == WaveFamily::R3;
}

bool is_shock(WaveFamily family) noexcept {
    return family == WaveFamily::S1 || family == WaveFamily::S3;
}

double rarefaction_u(double p, const GasState& anchor, WaveFamily family,
                     const GasConstants& gas) {
    require_physical(anchor, "rarefaction anchor");
    require_pressure(p);
    switch (family) {
        case WaveFamily::R1:
            if (p > anchor.p) throw DomainError("R1 requires p <= p_anchor");
            return anchor.u - isentrope_du(p, anchor, gas);
        case WaveFamily::R3:
            if (p < anchor.p) throw DomainError("R3 requires p >= p_anchor");
            return anchor.u + isentrope_du(p, anchor, gas);
        default:
            throw DomainError("rarefaction_u: family must be R1 or R3");
    }
}

GasState rarefaction_state(double p, const GasState& anchor, WaveFamily family,
                           const GasConstants& gas) {
    const double u = rarefaction_u(p, anchor, family, gas);
    if (p == 0.0) return GasState::vacuum(u, anchor.a);
    return GasState{isentrope_density(p, kappa(anchor, gas), gas), u, p, anchor.a};
}

GasState shock_state(double p, const GasState& anchor, WaveFamily family,
                     const GasConstants& gas) {
    require_physical(anchor, "shock anchor");
    require_pressure(p);
    double sign = 0.0;
    switch (family) {
        case WaveFamily::S1:
            if (p < anchor.p) throw DomainError("S1 requires p >= p_anchor");
            sign = -1.0;
            break;
        case WaveFamily::S3:
            if (p > anchor.p) throw DomainError("S3 requires p <= p_anchor");
            sign = 1.0;
            break;
        default:
            throw DomainError("shock_state: family must be S1 or S3");
    }
    if (p == anchor.p) return anchor;
    return GasState{1.0 / hugoniot_tau(p, anchor, gas), anchor.u + sign * hugoniot_du(p, anchor, gas),
                    p, anchor.a};
}

double shock_speed(const GasState& anchor, const GasState& state, WaveFamily family) {
    const double drho = state.rho - anchor.rho;
    if (drho == 0.0) throw ContactNotShock("shock_speed: equal densities describe a contact");
    const double ratio = state.rho * (state.p - anchor.p) / (anchor.rho * drho);
    if (!(ratio >= 0.0)) {
        throw DomainError("shock_speed: pressure and density jumps have opposite signs");
    }
    switch (family) {
        case WaveFamily::S1: return anchor.u - std::sqrt(ratio);
        case WaveFamily::S3: return anchor.u + std::sqrt(ratio);
        default: throw DomainError("shock_speed: family must be S1 or S3");
    }
}

bool lax_admissible(const GasState& anchor, const GasState& state, WaveFamily family,
                    const GasConstants& gas) {
    if (anchor.rho == state.rho) return false;
    double sigma = 0.0;
    try {
        sigma = shock_speed(anchor, state, family);
    } catch (const DomainError&) {
        return false;
    }
    const Eigenvalues behind = eigenvalues(state, gas);
    const Eigenvalues ahead = eigenvalues(anchor, gas);
    if (family == WaveFamily::S1) return behind.l1 < sigma && sigma < ahead.l1;
    return behind.l3 < sigma && sigma < ahead.l3;
}

GasState contact_state(const GasState& anchor, double rho_new) {
    require_physical(anchor, "contact anchor");
    if (!(rho_new > 0.0) || !std::isfinite(rho_new)) {
        throw DomainError("contact_state: density must be positive");
    }
    if (rho_new == anchor.rho) throw DegenerateContact("contact_state: density unchanged");
    GasState s = anchor;
    s.rho = rho_new;
    return s;
}

double fan_invariant(const GasState& state, WaveFamily family, const GasConstants& gas) {
    const double c = sound_speed(state, gas);
    const double w = 2.0 * c / (gas.gamma() - 1.0);
    switch (family) {
        case WaveFamily::R1: return state.u + w;
        case WaveFamily::R3: return state.u - w;
        default: throw DomainError("fan_invariant: family must be R1 or R3");
    }
}

GasState fan_point(double xi, double riemann_invariant, double kappa_value, WaveFamily family,
                   double area, const GasConstants& gas) {
    const double g = gas.gamma();
    const double ratio = (g - 1.0) / (g + 1.0);
    double c = 0.0;
    double u = 0.0;
    if (family == WaveFamily::R1) {
        c = ratio * (riemann_invariant - xi);
        u = xi + c;
    } else if (family == WaveFamily::R3) {
        c = ratio * (xi - riemann_invariant);
        u = xi - c;
    } else {
        throw DomainError("fan_point: family must be R1 or R3");
    }
    if (c <= 0.0) return GasState::vacuum(riemann_invariant, area);
    const double rho = std::pow(c * c / (g * kappa_value), 1.0 / (g - 1.0));
    return GasState{rho, u, kappa_value * std::pow(rho, g), area};
}

GasState fan_state(double xi, const GasState& anchor, WaveFamily family,
                   const GasConstants& gas) {
    const Eigenvalues lam = eigenvalues(anchor, gas);
    const double inv = fan_invariant(anchor, family, gas);
    if (family == WaveFamily::R1) {
        if (xi < lam.l1 || xi > inv) throw DomainError("fan_state: xi outside the R1 fan");
        if (xi == lam.l1) return anchor;
    } else {
        if (xi < lam.l3) throw DomainError("fan_state: xi outside the R3 fan");
        if (xi == lam.l3) return anchor;
    }
    return fan_point(xi, inv, kappa(anchor, gas), family, anchor.a, gas);
}

double w1(double p, const GasState& left, const GasConstants& gas) {
    require_physical(left, "w1 anchor");
    require_pressure(p);
    if (p <= left.p) return left.u - isentrope_du(p, left, gas);
    return left.u - hugoniot_du(p, left, gas);
}

double w3(double p, const GasState& right, const GasConstants& gas) {
    require_physical(right, "w3 anchor");
    require_pressure(p);
    if (p <= right.p) return right.u + isentrope_du(p, right, gas);
    return right.u + hugoniot_du(p, right, gas);
}

double w1_slope(double p, const GasState& left, const GasConstants& gas) {
    if (p <= left.p) return -isentrope_du_slope(p, left, gas);
    return -hugoniot_du_slope(p, left, gas);
}

double w3_slope(double p, const GasState& right, const GasConstants& gas) {
    if (p <= right.p) return isentrope_du_slope(p, right, gas);
    return hugoniot_du_slope(p, right, gas);
}

GasState w1_state(double p, const GasState& left, const GasConstants& gas) {
    if (p <= left.p) return rarefaction_state(p, left, WaveFamily::R1, gas);
    return shock_state(p, left, WaveFamily::S1, gas);
}

GasState w3_state(double p, const GasState& right, const GasConstants& gas) {
    const double u = w3(p, right, gas);
    if (p == 0.0) return GasState::vacuum(u, right.a);
    if (p == right.p) return right;
    const double rho = p < right.p ? isentrope_density(p, kappa(right, gas), gas)
                                   : 1.0 / hugoniot_tau(p, right, gas);
    return GasState{rho, u, p, right.a};
}

double l_curve_u(double p, const GasState& reference, const GasConstants& gas) {
    require_physical(reference, "l-curve reference");
    if (!(p > 0.0)) throw DomainError("l_curve_u: pressure must be positive");
    return reference.u * std::pow(reference.p / p, 1.0 / gas.gamma());
}

double zero_speed_shock_pressure(const GasState& anchor, const GasConstants& gas) {
    if (classify_region(anchor, gas) != Region::D1) {
        throw DomainError("zero_speed_shock_pressure: anchor must be in D1");
    }
    const double g = gas.gamma();
    const double m = mach(anchor, gas);
    return anchor.p * (1.0 + 2.0 * g / (g + 1.0) * (m * m - 1.0));
}

double RankineHugoniotResidual::max() const noexcept {
    return std::max({mass, momentum, energy});
}

RankineHugoniotResidual rankine_hugoniot_residual(const GasState& left, const GasState& right,
                                                  double sigma, const GasConstants& gas) {
    const auto terms = [&](const GasState& s) {
        const double rho_e = s.rho * total_energy(s, gas);
        struct T {
            double u1, u2, u3, f1, f2, f3;
        };
        return T{s.rho, s.rho * s.u, rho_e, s.rho * s.u, s.rho * s.u * s.u + s.p,
                 s.u * (rho_e + s.p)};
    };
    const auto l = terms(left);
    const auto r = terms(right);
    const auto residual = [&](double ul, double ur, double fl, double fr) {
        const double scale = std::max({std::abs(sigma * ul), std::abs(sigma * ur), std::abs(fl),
                                       std::abs(fr), 1e-300});
        return std::abs(-sigma * (ur - ul) + (fr - fl)) / scale;
    };
    return {residual(l.u1, r.u1, l.f1, r.f1), residual(l.u2, r.u2, l.f2, r.f2),
            residual(l.u3, r.u3, l.f3, r.f3)};
}

double curve_residual(const CurvePoint& point, const GasConstants& gas) {
    const GasState& s = point.state;
    const GasState& a = point.anchor;
    switch (point.family) {
        case WaveFamily::R1:
        case WaveFamily::R3: {
            const double k0 = kappa(a, gas);
            const double dk = std::abs(kappa(s, gas) - k0) / k0;
            const double i0 = fan_invariant(a, point.family, gas);
            const double di = std::abs(fan_invariant(s, point.family, gas) - i0) /
                              scale_of(i0, sound_speed(a, gas));
            return std::max(dk, di);
        }
        case WaveFamily::S1:
        case WaveFamily::S3:
            return rankine_hugoniot_residual(a, s, shock_speed(a, s, point.family), gas).max();
        case WaveFamily::J: {
            const double du = std::abs(s.u - a.u) / scale_of(a.u, sound_speed(a, gas));
            const double dp = std::abs(s.p - a.p) / a.p;
            return std::max(du, dp);
        }
        case WaveFamily::S0:
            return stationary_residual(a, s, gas).max();
        case WaveFamily::Vacuum:
            return 0.0;
    }
    return 0.0;
}

}  // namespace ductflow
