#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "ductflow/errors.hpp"
#include "ductflow/riemann.hpp"
#include "ductflow/stationary.hpp"

namespace ductflow {

namespace {

constexpr double kStrengthTolerance = 1e-10;
constexpr double kAcceptResidual = 1e-8;
constexpr double kDuplicateTolerance = 1e-7;

bool differs(double a, double b) {
    return std::abs(a - b) > kStrengthTolerance * std::max(std::abs(a), std::abs(b));
}

class FanBuilder {
public:
    FanBuilder(const GasState& start, FanOrigin origin) {
        fan_.states.push_back(start);
        fan_.origin = origin;
    }

    const GasState& back() const { return fan_.states.back(); }

    void add(WaveFamily family, const GasState& right, double lo, double hi) {
        fan_.waves.push_back(Wave{family, fan_.states.back(), right, lo, hi});
        fan_.states.push_back(right);
    }

    void add_stationary(const GasState& right) { add(WaveFamily::S0, right, 0.0, 0.0); }

    // 1-wave from the current state to `target`, which lies on its W1 curve.
    void add_1wave(const GasState& target, const GasConstants& gas) {
        const GasState from = back();
        if (!differs(target.p, from.p)) return;
        if (target.p > from.p) {
            const double s = shock_speed(from, target, WaveFamily::S1);
            add(WaveFamily::S1, target, s, s);
        } else {
            add(WaveFamily::R1, target, eigenvalues(from, gas).l1, eigenvalues(target, gas).l1);
        }
    }

    // Classical waves of a constant-area fan starting at the current state.
    void append(const WaveFan& tail) {
        for (const Wave& w : tail.waves) add(w.family, w.right, w.speed_lo, w.speed_hi);
        if (tail.vacuum) fan_.vacuum = tail.vacuum;
    }

    // Contact and 3-wave from the current state, whose pressure and velocity
    // already lie on the W3 curve of `right`.
    void close_on_w3(const GasState& right, const GasConstants& gas) {
        const GasState from = back();
        const bool has_3 = differs(from.p, right.p);
        GasState mid = has_3 ? w3_state(from.p, right, gas) : right;
        mid.u = from.u;
        if (differs(from.rho, mid.rho)) add(WaveFamily::J, mid, from.u, from.u);
        if (!has_3) return;
        const GasState left = back();
        if (from.p > right.p) {
            const double s = shock_speed(left, right, WaveFamily::S3);
            add(WaveFamily::S3, right, s, s);
        } else {
            add(WaveFamily::R3, right, eigenvalues(left, gas).l3, eigenvalues(right, gas).l3);
        }
    }

    WaveFan take() { return std::move(fan_); }

private:
    WaveFan fan_;
};

using Closure = std::function<std::optional<double>(double)>;

// Roots of a partially defined scalar closure on [lo, hi]: sample, then
// bisect every sign change between two defined neighbours.
std::vector<double> closure_roots(const Closure& h, double lo, double hi, bool log_spacing,
                                  bool include_ends) {
    const int n = kClosureScanPoints;
    std::vector<double> xs;
    for (int i = include_ends ? 0 : 1; i <= (include_ends ? n : n - 1); ++i) {
        const double t = static_cast<double>(i) / n;
        xs.push_back(log_spacing ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
    }
    if (include_ends) {
        xs.front() = lo;
        xs.back() = hi;
    }
    std::vector<std::optional<double>> hs;
    hs.reserve(xs.size());
    for (double x : xs) hs.push_back(h(x));

    std::vector<double> roots;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!hs[i]) continue;
        if (*hs[i] == 0.0) {
            roots.push_back(xs[i]);
            continue;
        }
        if (i + 1 >= xs.size() || !hs[i + 1] || *hs[i + 1] == 0.0) continue;
        if ((*hs[i] < 0.0) == (*hs[i + 1] < 0.0)) continue;
        double a = xs[i];
        double b = xs[i + 1];
        double ha = *hs[i];
        bool ok = true;
        for (int it = 0; it < 200 && b - a > 1e-15 * std::max(std::abs(a), std::abs(b)); ++it) {
            const double m = 0.5 * (a + b);
            const auto hm = h(m);
            if (!hm) {
                ok = false;
                break;
            }
            if (*hm == 0.0) {
                a = b = m;
                break;
            }
            if ((*hm < 0.0) == (ha < 0.0)) {
                a = m;
                ha = *hm;
            } else {
                b = m;
            }
        }
        if (ok) roots.push_back(0.5 * (a + b));
    }
    return roots;
}

std::optional<StationaryPair> try_jump(const GasState& anchor, double a_target,
                                       const GasConstants& gas) {
    try {
        return stationary_jump(anchor, a_target, gas);
    } catch (const NoStationarySolution&) {
        return std::nullopt;
    }
}

bool all_speeds_nonnegative(const WaveFan& fan) {
    return std::all_of(fan.waves.begin(), fan.waves.end(), [](const Wave& w) {
        return w.speed_lo >= -1e-12 * std::max(1.0, std::abs(w.speed_hi));
    });
}

std::vector<WaveFan> stationary_first(const GasState& left, const GasState& right, double a_right,
                                      const GasConstants& gas) {
    const Region region = classify_region(left, gas);
    if (region != Region::D1 && region != Region::GammaPlus) return {};
    const auto pair = try_jump(left, a_right, gas);
    if (!pair) return {};
    const WaveFan tail = solve_constant_area(pair->supersonic, right, gas);
    if (!all_speeds_nonnegative(tail)) return {};
    FanBuilder b(left, FanOrigin::StationaryFirst);
    b.add_stationary(pair->supersonic);
    b.append(tail);
    return {b.take()};
}

std::vector<WaveFan> wave_first(const GasState& left, const GasState& right, double a_right,
                                const GasConstants& gas) {
    const double invariant = fan_invariant(left, WaveFamily::R1, gas);
    double p_lo = 0.0;
    if (classify_region(left, gas) == Region::D1) {
        p_lo = zero_speed_shock_pressure(left, gas);
    } else {
        if (invariant <= 0.0) return {};
        const GasState sonic = fan_point(0.0, invariant, kappa(left, gas), WaveFamily::R1, left.a, gas);
        p_lo = sonic.p;
    }
    if (w1(p_lo, left, gas) < 0.0) return {};
    double p_hi = std::max(p_lo, left.p) * 2.0;
    while (w1(p_hi, left, gas) >= 0.0) p_hi *= 2.0;
    {
        double lo = p_lo;
        for (int it = 0; it < 200 && p_hi - lo > 1e-15 * p_hi; ++it) {
            const double m = 0.5 * (lo + p_hi);
            (w1(m, left, gas) >= 0.0 ? lo : p_hi) = m;
        }
        p_hi = lo;
    }

    const auto after_jump = [&](double p) -> std::optional<std::pair<GasState, GasState>> {
        const GasState u1 = w1_state(p, left, gas);
        if (u1.u < 0.0) return std::nullopt;
        const auto pair = try_jump(u1, a_right, gas);
        if (!pair) return std::nullopt;
        return std::make_pair(u1, pair->subsonic);
    };
    const Closure h = [&](double p) -> std::optional<double> {
        const auto s = after_jump(p);
        if (!s) return std::nullopt;
        return s->second.u - w3(s->second.p, right, gas);
    };

    std::vector<WaveFan> out;
    for (double p : closure_roots(h, p_lo, p_hi, true, true)) {
        const auto s = after_jump(p);
        if (!s) continue;
        FanBuilder b(left, FanOrigin::WaveFirst);
        b.add_1wave(s->first, gas);
        if (s->first.a != s->second.a) b.add_stationary(s->second);
        b.close_on_w3(right, gas);
        out.push_back(b.take());
    }
    return out;
}

std::vector<WaveFan> sonic_attached(const GasState& left, double a_left, const GasState& right,
                                    double a_right, const GasConstants& gas) {
    if (classify_region(left, gas) != Region::D2 || !(a_right > a_left)) return {};
    const double invariant = fan_invariant(left, WaveFamily::R1, gas);
    const GasState sonic = fan_point(0.0, invariant, kappa(left, gas), WaveFamily::R1, a_left, gas);
    const auto pair = try_jump(sonic, a_right, gas);
    if (!pair) return {};
    const WaveFan tail = solve_constant_area(pair->supersonic, right, gas);
    if (!all_speeds_nonnegative(tail)) return {};
    FanBuilder b(left, FanOrigin::SonicAttached);
    b.add(WaveFamily::R1, sonic, eigenvalues(left, gas).l1, 0.0);
    b.add_stationary(pair->supersonic);
    b.append(tail);
    return {b.take()};
}

std::vector<WaveFan> resonant(const GasState& left, double a_left, const GasState& right,
                              double a_right, const GasConstants& gas) {
    if (classify_region(left, gas) != Region::D1) return {};
    struct Chain {
        GasState jumped, shocked, settled;
    };
    const auto chain = [&](double a) -> std::optional<Chain> {
        const auto first = try_jump(left, a, gas);
        if (!first || first->coincident) return std::nullopt;
        const GasState v = first->supersonic;
        if (classify_region(v, gas) != Region::D1) return std::nullopt;
        const GasState shocked = shock_state(zero_speed_shock_pressure(v, gas), v, WaveFamily::S1, gas);
        const auto second = try_jump(shocked, a_right, gas);
        if (!second) return std::nullopt;
        return Chain{v, shocked, second->subsonic};
    };
    const Closure h = [&](double a) -> std::optional<double> {
        const auto c = chain(a);
        if (!c) return std::nullopt;
        return c->settled.u - w3(c->settled.p, right, gas);
    };

    std::vector<WaveFan> out;
    const double lo = std::min(a_left, a_right);
    const double hi = std::max(a_left, a_right);
    for (double a : closure_roots(h, lo, hi, false, false)) {
        const auto c = chain(a);
        if (!c) continue;
        FanBuilder b(left, FanOrigin::Resonant);
        b.add_stationary(c->jumped);
        b.add(WaveFamily::S1, c->shocked, 0.0, 0.0);
        b.add_stationary(c->settled);
        b.close_on_w3(right, gas);
        out.push_back(b.take());
    }
    return out;
}

double max_residual(const WaveFan& fan, const GasConstants& gas) {
    double r = 0.0;
    for (const Wave& w : fan.waves) r = std::max(r, wave_residual(w, gas));
    return r;
}

bool close(const GasState& a, const GasState& b) {
    const auto near = [](double x, double y, double scale) {
        return std::abs(x - y) <= kDuplicateTolerance * scale;
    };
    const double speed = std::max({1.0, std::abs(a.u), std::abs(b.u)});
    return near(a.rho, b.rho, std::max(a.rho, b.rho)) && near(a.u, b.u, speed) &&
           near(a.p, b.p, std::max(a.p, b.p));
}

bool same_fan(const WaveFan& a, const WaveFan& b) {
    if (a.families() != b.families()) return false;
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        if (!close(a.states[i], b.states[i])) return false;
    }
    return true;
}

}  // namespace

bool fan_admissible(const WaveFan& fan, const GasConstants& gas) {
    return speeds_monotone(fan) && stationary_waves_admissible(fan, gas) &&
           max_residual(fan, gas) <= kAcceptResidual;
}

std::vector<WaveFan> duct_fans(DuctConfiguration configuration, const GasState& left,
                               double a_left, const GasState& right, double a_right,
                               const GasConstants& gas) {
    const GasState l = left.with_area(a_left);
    const GasState r = right.with_area(a_right);
    require_physical(l, "left state");
    require_physical(r, "right state");
    switch (configuration) {
        case DuctConfiguration::StationaryFirst: return stationary_first(l, r, a_right, gas);
        case DuctConfiguration::WaveFirst: return wave_first(l, r, a_right, gas);
        case DuctConfiguration::SonicAttached: return sonic_attached(l, a_left, r, a_right, gas);
        case DuctConfiguration::Resonant: return resonant(l, a_left, r, a_right, gas);
    }
    return {};
}

DuctRiemannSolutions solve_duct(const GasState& left, double a_left, const GasState& right,
                                double a_right, const GasConstants& gas) {
    if (!(a_left > 0.0) || !(a_right > 0.0)) {
        throw DomainError("solve_duct: cross-sections must be positive");
    }
    const GasState l = left.with_area(a_left);
    const GasState r = right.with_area(a_right);
    DuctRiemannSolutions result;
    if (a_left == a_right) {
        result.solutions.push_back(solve_constant_area(l, r, gas));
        result.multiplicity_note = "constant cross-section: classical solution";
        return result;
    }

    constexpr DuctConfiguration kAll[] = {DuctConfiguration::StationaryFirst,
                                          DuctConfiguration::WaveFirst,
                                          DuctConfiguration::SonicAttached,
                                          DuctConfiguration::Resonant};
    std::ostringstream rejected;
    for (bool reflect : {false, true}) {
        for (DuctConfiguration cfg : kAll) {
            const std::vector<WaveFan> fans =
                reflect ? duct_fans(cfg, mirror(r), a_right, mirror(l), a_left, gas)
                        : duct_fans(cfg, l, a_left, r, a_right, gas);
            for (const WaveFan& candidate : fans) {
                const WaveFan fan = reflect ? mirror(candidate) : candidate;
                if (!fan_admissible(fan, gas)) {
                    rejected << " [" << fan.pattern() << " via " << to_string(fan.origin)
                             << ": residual " << max_residual(fan, gas) << "]";
                    continue;
                }
                const bool dup = std::any_of(result.solutions.begin(), result.solutions.end(),
                                             [&](const WaveFan& s) { return same_fan(s, fan); });
                if (!dup) result.solutions.push_back(fan);
            }
        }
    }

    if (result.solutions.empty()) {
        std::ostringstream msg;
        msg << "no admissible duct solution: left " << to_string(classify_region(l, gas))
            << " (a_min " << a_min(l, gas) << "), right " << to_string(classify_region(r, gas))
            << " (a_min " << a_min(r, gas) << "), a " << a_left << " -> " << a_right;
        const std::string extra = rejected.str();
        if (!extra.empty()) msg << "; rejected:" << extra;
        throw NoSolution(msg.str());
    }

    std::ostringstream note;
    if (result.solutions.size() == 1) {
        note << "unique among implemented configurations";
    } else {
        note << result.solutions.size() << " admissible solutions:";
        for (const WaveFan& f : result.solutions) {
            note << " [" << f.pattern() << " via " << to_string(f.origin)
                 << (f.mirrored ? ", reflected" : "") << "]";
        }
    }
    result.multiplicity_note = note.str();
    return result;
}

}  // namespace ductflow
