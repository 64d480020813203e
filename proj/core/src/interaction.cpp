#include "ductflow/interaction.hpp"

#include <cmath>
#include <sstream>

#include "ductflow/errors.hpp"

namespace ductflow {

namespace {

double relative(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string describe(const WaveFan& fan) {
    std::ostringstream out;
    out << fan.pattern() << " (" << to_string(fan.origin) << (fan.mirrored ? ", reflected" : "")
        << ")";
    return out.str();
}

}  // namespace

ValidationReport validate_input(const InteractionInput& inp, const GasConstants& gas, double tol) {
    require_physical(inp.u_minus, "U-");
    require_physical(inp.u_m, "Um");
    require_physical(inp.u_plus, "U+");
    if (!(inp.a0 > 0.0) || !(inp.a1 > 0.0)) throw InvalidInput("cross-sections must be positive");

    ValidationReport r;
    r.tol = tol;
    r.j_velocity = relative(inp.u_minus.u, inp.u_m.u);
    r.j_pressure = relative(inp.u_minus.p, inp.u_m.p);
    r.densities_distinct = relative(inp.u_minus.rho, inp.u_m.rho) > tol;
    if (r.j_velocity > tol || r.j_pressure > tol) {
        std::ostringstream msg;
        msg << "contact relation violated: u residual " << r.j_velocity << ", p residual "
            << r.j_pressure << " (tol " << tol << ")";
        throw InvalidInput(msg.str());
    }
    if (!r.densities_distinct) throw InvalidInput("contact has equal densities on both sides");
    if (!(inp.u_m.u > 0.0)) throw InvalidInput("contact must move toward the jump (um > 0)");

    r.s0 = stationary_residual(inp.u_m.with_area(inp.a0), inp.u_plus.with_area(inp.a1), gas);
    r.s0_flagged = r.s0.max() > tol;
    return r;
}

std::string_view to_string(InteractionCase c) noexcept {
    switch (c) {
        case InteractionCase::Case1: return "Case1";
        case InteractionCase::Case1Vacuum: return "Case1Vacuum";
        case InteractionCase::Case2: return "Case2";
        case InteractionCase::Transonic2: return "Transonic2";
        case InteractionCase::Case3: return "Case3";
        case InteractionCase::Case4: return "Case4";
        case InteractionCase::Transonic4: return "Transonic4";
    }
    return "?";
}

double vacuum_gap(const GasState& left_edge, const GasState& right_edge, const GasConstants& gas) {
    require_physical(left_edge, "left edge");
    require_physical(right_edge, "right edge");
    return fan_invariant(right_edge, WaveFamily::R3, gas) -
           fan_invariant(left_edge, WaveFamily::R1, gas);
}

InteractionCase classify(const InteractionInput& inp, const GasConstants& gas) {
    const GasState minus = inp.u_minus.with_area(inp.a0);
    const GasState middle = inp.u_m.with_area(inp.a0);
    const Region rm = classify_region(middle, gas);
    const Region rminus = classify_region(minus, gas);
    const auto sonic = [](Region r) {
        return r == Region::GammaPlus || r == Region::GammaMinus || r == Region::Gamma0;
    };
    if (sonic(rm) || sonic(rminus)) {
        std::ostringstream msg;
        msg << "sonic input: Um in " << to_string(rm) << ", U- in " << to_string(rminus);
        throw AmbiguousClassification(msg.str());
    }
    if (!(middle.u > 0.0)) throw InvalidInput("contact must move toward the jump (um > 0)");

    const bool m_super = rm == Region::D1;
    const bool minus_super = rminus == Region::D1;
    const bool heavier = minus.rho > middle.rho;
    if (m_super && minus_super) {
        if (!heavier) return InteractionCase::Case2;
        try {
            const GasState jumped = admissible_stationary(minus, inp.a1, gas);
            if (vacuum_gap(jumped, inp.u_plus.with_area(inp.a1), gas) >= 0.0) {
                return InteractionCase::Case1Vacuum;
            }
        } catch (const NoStationarySolution&) {
            // resolve reports the infeasible jump
        }
        return InteractionCase::Case1;
    }
    if (m_super) return InteractionCase::Transonic2;
    if (!minus_super) return heavier ? InteractionCase::Case3 : InteractionCase::Case4;
    return InteractionCase::Transonic4;
}

InteractionResult resolve(const InteractionInput& inp, const GasConstants& gas) {
    const GasState minus = inp.u_minus.with_area(inp.a0);
    const GasState plus = inp.u_plus.with_area(inp.a1);
    InteractionResult out{classify(inp, gas), {}, {}};

    const auto fail = [&](const std::string& why) {
        std::ostringstream msg;
        msg << to_string(out.tag) << ": " << why << " (a0 " << inp.a0 << ", a1 " << inp.a1
            << ", a_min(U-) " << a_min(minus, gas) << ")";
        throw NoResolution(msg.str());
    };
    const auto keep = [&](const std::vector<WaveFan>& fans) {
        for (const WaveFan& f : fans) {
            if (fan_admissible(f, gas)) out.fans.push_back(f);
        }
    };

    switch (out.tag) {
        case InteractionCase::Case1:
        case InteractionCase::Case1Vacuum:
        case InteractionCase::Case2: {
            GasState jumped;
            try {
                jumped = admissible_stationary(minus, inp.a1, gas);
            } catch (const NoStationarySolution& e) {
                fail(e.what());
            }
            const WaveFan tail = solve_constant_area(jumped, plus, gas);
            WaveFan fan;
            fan.origin = FanOrigin::StationaryFirst;
            fan.states = {minus, jumped};
            fan.waves = {Wave{WaveFamily::S0, minus, jumped, 0.0, 0.0}};
            fan.waves.insert(fan.waves.end(), tail.waves.begin(), tail.waves.end());
            fan.states.insert(fan.states.end(), tail.states.begin() + 1, tail.states.end());
            fan.vacuum = tail.vacuum;
            keep({fan});
            if (out.fans.empty()) fail("post-jump waves are not all rightward: " + fan.pattern());
            break;
        }
        case InteractionCase::Transonic2:
            keep(duct_fans(DuctConfiguration::SonicAttached, minus, inp.a0, plus, inp.a1, gas));
            break;
        case InteractionCase::Case3:
        case InteractionCase::Case4:
            keep(duct_fans(DuctConfiguration::WaveFirst, minus, inp.a0, plus, inp.a1, gas));
            if (out.fans.size() > 1) out.fans.resize(1);
            break;
        case InteractionCase::Transonic4:
            for (DuctConfiguration c : {DuctConfiguration::StationaryFirst,
                                        DuctConfiguration::WaveFirst, DuctConfiguration::Resonant}) {
                keep(duct_fans(c, minus, inp.a0, plus, inp.a1, gas));
            }
            break;
    }
    if (out.fans.empty()) fail("no admissible closure");

    std::ostringstream notes;
    for (std::size_t i = 0; i < out.fans.size(); ++i) {
        if (i) notes << "; ";
        notes << describe(out.fans[i]);
    }
    out.notes = notes.str();
    return out;
}

double touch_time(const InteractionInput& inp, double x1, double x2) {
    if (!(x2 > x1)) throw InvalidInput("contact must start left of the jump (x1 < x2)");
    if (!(inp.u_m.u > 0.0)) throw InvalidInput("contact must move toward the jump (um > 0)");
    return (x2 - x1) / inp.u_m.u;
}

GasState sample_interaction(const WaveFan& fan, const InteractionInput& inp, double x1, double x2,
                            double x, double t, const GasConstants& gas) {
    const double t_touch = touch_time(inp, x1, x2);
    if (t <= t_touch) {
        if (x < x1 + inp.u_m.u * t) return inp.u_minus.with_area(inp.a0);
        if (x < x2) return inp.u_m.with_area(inp.a0);
        return inp.u_plus.with_area(inp.a1);
    }
    return sample(fan, (x - x2) / (t - t_touch), gas);
}

}  // namespace ductflow
