#include "ductflow/fvm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "ductflow/errors.hpp"

namespace ductflow {

namespace {

void check_state(const GasState& s, const std::string& name) {
    const auto bad = [&](const char* field, const std::string& why) {
        throw InvalidInput(name + "." + field + ": " + why);
    };
    if (!std::isfinite(s.rho) || !(s.rho > 0.0)) bad("rho", "must be positive");
    if (!std::isfinite(s.u)) bad("u", "must be finite");
    if (!std::isfinite(s.p) || !(s.p > 0.0)) bad("p", "must be positive");
    if (!std::isfinite(s.a) || !(s.a > 0.0)) bad("a", "must be positive");
}

GasState cell_state(const ConservedCell& cell, std::size_t index, double t,
                    const GasConstants& gas) {
    try {
        return primitive_from_conserved(cell, gas);
    } catch (const NonPhysicalCell& e) {
        throw NonPhysicalCell(index, t, e.rho(), e.pressure());
    }
}

Flux rusanov(const GasState& l, const ConservedCell& vl, const GasState& r,
             const ConservedCell& vr, const GasConstants& gas) {
    const Flux fl = physical_flux(l, gas);
    const Flux fr = physical_flux(r, gas);
    const double s = std::max(std::abs(l.u) + sound_speed(l, gas), std::abs(r.u) + sound_speed(r, gas));
    return Flux{0.5 * (fl.mass + fr.mass - s * (vr.m - vl.m)),
                0.5 * (fl.momentum + fr.momentum - s * (vr.q - vl.q)),
                0.5 * (fl.energy + fr.energy - s * (vr.en - vl.en))};
}

}  // namespace

void SimConfig::validate() const {
    const auto bad = [](const std::string& msg) { throw InvalidInput(msg); };
    if (!std::isfinite(x_lo) || !std::isfinite(x_hi) || !(x_lo < x_hi)) bad("x_lo must be below x_hi");
    if (cells < 4) bad("cells: must be at least 4");
    if (!(cfl > 0.0 && cfl <= 1.0)) bad("cfl: must lie in (0, 1]");
    if (!std::isfinite(t_end) || t_end < 0.0) bad("t_end: must be nonnegative");
    if (!(gamma > 1.0 && gamma < 3.0)) bad("gamma: must lie in (1, 3)");
    const ThreeStateInit& in = initial;
    if (!(x_lo < in.x1)) bad("x1: must lie above x_lo");
    if (!(in.x1 < in.x2)) bad("x1: must lie below x2");
    if (!(in.x2 < x_hi)) bad("x2: must lie below x_hi");
    check_state(in.left, "left");
    check_state(in.middle, "middle");
    check_state(in.right, "right");
    if (in.left.a != in.middle.a) bad("left.a: must equal middle.a (the cross-section jumps only at x2)");
}

Flux physical_flux(const GasState& s, const GasConstants& gas) {
    const double rho_e = s.rho * total_energy(s, gas);
    return Flux{s.a * s.rho * s.u, s.a * (s.rho * s.u * s.u + s.p), s.a * s.u * (rho_e + s.p)};
}

Flux rusanov_flux(const ConservedCell& left, const ConservedCell& right, const GasConstants& gas) {
    return rusanov(primitive_from_conserved(left, gas), left, primitive_from_conserved(right, gas),
                   right, gas);
}

double source_increment(double p_cell, double a_left, double a_right, double dx, double dt) {
    return dt * p_cell * (a_right - a_left) / (2.0 * dx);
}

double stable_time_step(const SimGrid& grid, double cfl, const GasConstants& gas) {
    double smax = 0.0;
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        const GasState s = cell_state(grid.cells[i], i, grid.t, gas);
        smax = std::max(smax, std::abs(s.u) + sound_speed(s, gas));
    }
    return cfl * grid.dx / smax;
}

SimGrid initial_grid(const SimConfig& cfg, const GasConstants& gas) {
    cfg.validate();
    SimGrid grid;
    grid.dx = cfg.dx();
    grid.x_lo = cfg.x_lo;
    const auto n = static_cast<std::size_t>(cfg.cells);
    const auto interface = [&](double x) {
        return static_cast<std::size_t>(std::lround((x - cfg.x_lo) / grid.dx));
    };
    const std::size_t k1 = interface(cfg.initial.x1);
    const std::size_t k2 = interface(cfg.initial.x2);
    const ConservedCell left = conserved_from_primitive(cfg.initial.left, gas);
    const ConservedCell middle = conserved_from_primitive(cfg.initial.middle, gas);
    const ConservedCell right = conserved_from_primitive(cfg.initial.right, gas);
    grid.cells.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid.cells[i] = i < k1 ? left : (i < k2 ? middle : right);
    }
    return grid;
}

SimGrid step(const SimGrid& grid, const SimConfig& cfg, const GasConstants& gas) {
    const std::size_t n = grid.cells.size();
    std::vector<GasState> prim(n);
    double smax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        prim[i] = cell_state(grid.cells[i], i, grid.t, gas);
        smax = std::max(smax, std::abs(prim[i].u) + sound_speed(prim[i], gas));
    }
    double dt = cfg.cfl * grid.dx / smax;
    bool last = false;
    if (grid.t + dt >= cfg.t_end) {
        dt = cfg.t_end - grid.t;
        last = true;
    }
    SimGrid next = grid;
    if (!(dt > 0.0)) {
        next.t = std::max(grid.t, cfg.t_end);
        return next;
    }

    // flux[k] sits on the interface between cells k-1 and k; the ghosts copy
    // the boundary cells.
    std::vector<Flux> flux(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t l = k == 0 ? 0 : k - 1;
        const std::size_t r = k == n ? n - 1 : k;
        flux[k] = rusanov(prim[l], grid.cells[l], prim[r], grid.cells[r], gas);
    }
    const double lambda = dt / grid.dx;
    const double t_new = last ? cfg.t_end : grid.t + dt;
    for (std::size_t i = 0; i < n; ++i) {
        ConservedCell& c = next.cells[i];
        const double a_left = grid.cells[i == 0 ? 0 : i - 1].a;
        const double a_right = grid.cells[i + 1 == n ? i : i + 1].a;
        c.m -= lambda * (flux[i + 1].mass - flux[i].mass);
        c.q -= lambda * (flux[i + 1].momentum - flux[i].momentum) -
               source_increment(prim[i].p, a_left, a_right, grid.dx, dt);
        c.en -= lambda * (flux[i + 1].energy - flux[i].energy);
        cell_state(c, i, t_new, gas);
    }
    next.t = t_new;
    ++next.steps;
    return next;
}

SimGrid run(const SimConfig& cfg, const GasConstants& gas) {
    SimGrid grid = initial_grid(cfg, gas);
    while (grid.t < cfg.t_end) grid = step(grid, cfg, gas);
    return grid;
}

std::vector<GasState> primitives(const SimGrid& grid, const GasConstants& gas) {
    std::vector<GasState> out;
    out.reserve(grid.cells.size());
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        out.push_back(cell_state(grid.cells[i], i, grid.t, gas));
    }
    return out;
}

}  // namespace ductflow
