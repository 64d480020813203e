#include "ductflow/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ductflow/errors.hpp"
#include "ductflow/stationary.hpp"

namespace ductflow {

namespace {

constexpr double kStrengthTolerance = 1e-10;

bool differs(double a, double b) {
    return std::abs(a - b) > kStrengthTolerance * std::max(std::abs(a), std::abs(b));
}

WaveFamily mirror_family(WaveFamily family) noexcept {
    switch (family) {
        case WaveFamily::R1: return WaveFamily::R3;
        case WaveFamily::R3: return WaveFamily::R1;
        case WaveFamily::S1: return WaveFamily::S3;
        case WaveFamily::S3: return WaveFamily::S1;
        default: return family;
    }
}

}  // namespace

std::string_view to_string(FanOrigin origin) noexcept {
    switch (origin) {
        case FanOrigin::Classical: return "classical";
        case FanOrigin::StationaryFirst: return "stationary-first";
        case FanOrigin::WaveFirst: return "wave-first";
        case FanOrigin::SonicAttached: return "sonic-attached";
        case FanOrigin::Resonant: return "resonant";
    }
    return "?";
}

std::string WaveFan::pattern() const {
    std::string out;
    for (const Wave& w : waves) {
        if (!out.empty()) out += ' ';
        out += to_string(w.family);
    }
    return out;
}

std::vector<WaveFamily> WaveFan::families() const {
    std::vector<WaveFamily> out;
    out.reserve(waves.size());
    for (const Wave& w : waves) out.push_back(w.family);
    return out;
}

bool generates_vacuum(const GasState& left, const GasState& right, const GasConstants& gas) {
    return fan_invariant(left, WaveFamily::R1, gas) <= fan_invariant(right, WaveFamily::R3, gas);
}

std::optional<StarRegion> star_region(const GasState& left, const GasState& right,
                                      const GasConstants& gas) {
    require_physical(left, "left state");
    require_physical(right, "right state");
    if (generates_vacuum(left, right, gas)) return std::nullopt;

    const auto gap = [&](double p) { return w3(p, right, gas) - w1(p, left, gas); };
    const auto gap_slope = [&](double p) { return w3_slope(p, right, gas) - w1_slope(p, left, gas); };

    double lo = 0.0;
    double hi = std::max(left.p, right.p);
    while (gap(hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
    }

    // Two-rarefaction estimate as the starting point.
    const double g = gas.gamma();
    const double z = (g - 1.0) / (2.0 * g);
    const double cl = sound_speed(left, gas);
    const double cr = sound_speed(right, gas);
    const double num = cl + cr - 0.5 * (g - 1.0) * (right.u - left.u);
    double p = 0.5 * (lo + hi);
    if (num > 0.0) {
        const double guess = std::pow(num / (cl / std::pow(left.p, z) + cr / std::pow(right.p, z)), 1.0 / z);
        if (guess > lo && guess < hi) p = guess;
    }

    int it = 0;
    for (; it < 200; ++it) {
        const double f = gap(p);
        if (f == 0.0) break;
        if (f < 0.0) {
            lo = p;
        } else {
            hi = p;
        }
        double next = p - f / gap_slope(p);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const bool done = std::abs(next - p) <= 1e-12 * std::max(1.0, p);
        p = next;
        if (done) break;
    }
    return StarRegion{p, 0.5 * (w1(p, left, gas) + w3(p, right, gas)), it + 1};
}

WaveFan solve_constant_area(const GasState& left, const GasState& right, const GasConstants& gas) {
    require_physical(left, "left state");
    require_physical(right, "right state");
    if (left.a != right.a) {
        throw DomainError("solve_constant_area: states must share the cross-section");
    }
    WaveFan fan;
    fan.origin = FanOrigin::Classical;

    const auto star = star_region(left, right, gas);
    if (!star) {
        const double lo = fan_invariant(left, WaveFamily::R1, gas);
        const double hi = fan_invariant(right, WaveFamily::R3, gas);
        const GasState vac_lo = GasState::vacuum(lo, left.a);
        const GasState vac_hi = GasState::vacuum(hi, left.a);
        fan.waves = {
            Wave{WaveFamily::R1, left, vac_lo, eigenvalues(left, gas).l1, lo},
            Wave{WaveFamily::Vacuum, vac_lo, vac_hi, lo, hi},
            Wave{WaveFamily::R3, vac_hi, right, hi, eigenvalues(right, gas).l3},
        };
        fan.states = {left, vac_lo, vac_hi, right};
        fan.vacuum = VacuumWedge{lo, hi};
        return fan;
    }

    const bool has_1 = differs(star->p, left.p);
    const bool has_3 = differs(star->p, right.p);
    // a zero-strength wave pins the contact speed to the untouched side
    const double u_star = !has_1 ? left.u : (!has_3 ? right.u : star->u);
    GasState left_star = has_1 ? w1_state(star->p, left, gas) : left;
    GasState right_star = has_3 ? w3_state(star->p, right, gas) : right;
    left_star.u = u_star;
    right_star.u = u_star;
    const bool has_j = (has_1 || has_3) ? differs(left_star.rho, right_star.rho)
                                        : differs(left.rho, right.rho);
    if (!has_j) right_star = has_3 ? left_star : right;
    if (!has_j && !has_3) left_star = right;

    fan.states.push_back(left);
    if (has_1) {
        if (star->p > left.p) {
            const double s = shock_speed(left, left_star, WaveFamily::S1);
            fan.waves.push_back({WaveFamily::S1, left, left_star, s, s});
        } else {
            fan.waves.push_back({WaveFamily::R1, left, left_star, eigenvalues(left, gas).l1,
                                 eigenvalues(left_star, gas).l1});
        }
        fan.states.push_back(left_star);
    }
    if (has_j) {
        const GasState& from = fan.states.back();
        fan.waves.push_back({WaveFamily::J, from, right_star, u_star, u_star});
        fan.states.push_back(right_star);
    }
    if (has_3) {
        const GasState from = fan.states.back();
        if (star->p > right.p) {
            const double s = shock_speed(from, right, WaveFamily::S3);
            fan.waves.push_back({WaveFamily::S3, from, right, s, s});
        } else {
            fan.waves.push_back({WaveFamily::R3, from, right, eigenvalues(from, gas).l3,
                                 eigenvalues(right, gas).l3});
        }
        fan.states.push_back(right);
    }
    if (fan.waves.empty()) fan.states = {left};
    return fan;
}

GasState sample(const WaveFan& fan, double xi, const GasConstants& gas) {
    for (std::size_t i = 0; i < fan.waves.size(); ++i) {
        const Wave& w = fan.waves[i];
        if (xi < w.speed_lo) return fan.states[i];
        if (xi < w.speed_hi) {
            switch (w.family) {
                case WaveFamily::R1:
                    return fan_point(xi, fan_invariant(w.left, WaveFamily::R1, gas),
                                     kappa(w.left, gas), WaveFamily::R1, w.left.a, gas);
                case WaveFamily::R3:
                    return fan_point(xi, fan_invariant(w.right, WaveFamily::R3, gas),
                                     kappa(w.right, gas), WaveFamily::R3, w.right.a, gas);
                case WaveFamily::Vacuum:
                    return GasState::vacuum(xi, w.left.a);
                default:
                    break;
            }
        }
    }
    return fan.states.back();
}

double wave_residual(const Wave& w, const GasConstants& gas) {
    switch (w.family) {
        case WaveFamily::R1:
        case WaveFamily::R3: {
            const bool one = w.family == WaveFamily::R1;
            const GasState& solid = one ? w.left : w.right;
            const GasState& other = one ? w.right : w.left;
            if (other.is_vacuum()) {
                const double edge = fan_invariant(solid, w.family, gas);
                const double scale = std::max(std::abs(edge), sound_speed(solid, gas));
                return std::abs(other.u - edge) / scale;
            }
            const double r = curve_residual({other, w.family, solid}, gas);
            const double head = one ? eigenvalues(w.left, gas).l1 : eigenvalues(w.left, gas).l3;
            const double tail = one ? eigenvalues(w.right, gas).l1 : eigenvalues(w.right, gas).l3;
            const double scale = std::max({std::abs(head), std::abs(tail), sound_speed(solid, gas)});
            return std::max({r, std::abs(w.speed_lo - head) / scale,
                             std::abs(w.speed_hi - tail) / scale});
        }
        case WaveFamily::S1:
        case WaveFamily::S3: {
            const double r = rankine_hugoniot_residual(w.left, w.right, w.speed_lo, gas).max();
            return lax_admissible(w.left, w.right, w.family, gas) ? r : 1.0;
        }
        case WaveFamily::J: {
            const double r = curve_residual({w.right, WaveFamily::J, w.left}, gas);
            const double scale = std::max(std::abs(w.left.u), sound_speed(w.left, gas));
            return std::max(r, std::abs(w.speed_lo - w.left.u) / scale);
        }
        case WaveFamily::S0: {
            const double r = stationary_residual(w.left, w.right, gas).max();
            return std::max({r, std::abs(w.speed_lo), std::abs(w.speed_hi)});
        }
        case WaveFamily::Vacuum:
            return (w.left.is_vacuum() && w.right.is_vacuum()) ? 0.0 : 1.0;
    }
    return 0.0;
}

bool speeds_monotone(const WaveFan& fan, double tol) {
    double last = -std::numeric_limits<double>::infinity();
    for (const Wave& w : fan.waves) {
        const double scale = std::max({1.0, std::abs(w.speed_lo), std::abs(last)});
        if (w.speed_hi < w.speed_lo - tol * scale) return false;
        if (w.speed_lo < last - tol * scale) return false;
        last = w.speed_hi;
    }
    return true;
}

bool stationary_waves_admissible(const WaveFan& fan, const GasConstants& gas) {
    return std::all_of(fan.waves.begin(), fan.waves.end(), [&](const Wave& w) {
        return w.family != WaveFamily::S0 || same_domain_closure(w.left, w.right, gas);
    });
}

GasState mirror(const GasState& state) noexcept {
    GasState s = state;
    s.u = -s.u;
    return s;
}

WaveFan mirror(const WaveFan& fan) {
    WaveFan out;
    out.origin = fan.origin;
    out.mirrored = !fan.mirrored;
    for (auto it = fan.waves.rbegin(); it != fan.waves.rend(); ++it) {
        out.waves.push_back(Wave{mirror_family(it->family), mirror(it->right), mirror(it->left),
                                 -it->speed_hi, -it->speed_lo});
    }
    for (auto it = fan.states.rbegin(); it != fan.states.rend(); ++it) {
        out.states.push_back(mirror(*it));
    }
    if (fan.vacuum) out.vacuum = VacuumWedge{-fan.vacuum->hi, -fan.vacuum->lo};
    return out;
}

}  // namespace ductflow
