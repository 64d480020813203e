#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "ductflow/errors.hpp"
#include "ductflow/riemann.hpp"
#include "ductflow/stationary.hpp"

namespace ductflow::cli {

namespace {

std::string format_row(double x, const GasState& s, const GasConstants& gas) {
    const bool vac = s.is_vacuum();
    const double k = vac ? 0.0 : kappa(s, gas);
    const double m = vac ? 0.0 : mach(s, gas);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x, s.a, s.rho,
                  s.u, s.p, k, m);
    return buf;
}

// Runs `body` against the CSV destination and the summary destination.
template <class Body>
void with_output(const RunSpec& spec, std::ostream& out, std::ostream& info, Body&& body) {
    if (spec.output_path == "-") {
        body(out, info);
        return;
    }
    std::ofstream file(spec.output_path);
    if (!file) throw std::runtime_error("cannot write '" + spec.output_path + "'");
    body(file, out);
    file.flush();
    if (!file) throw std::runtime_error("write failed for '" + spec.output_path + "'");
}

const WaveFan& pick(const std::vector<WaveFan>& fans, int index) {
    if (index < 0 || static_cast<std::size_t>(index) >= fans.size()) {
        throw UsageError("--solution " + std::to_string(index) + " out of range (" +
                         std::to_string(fans.size()) + " solution(s))");
    }
    return fans[static_cast<std::size_t>(index)];
}

void simulate(const RunSpec& spec, std::ostream& out, std::ostream& info) {
    const SimConfig cfg = resolve_config(spec);
    const GasConstants gas(cfg.gamma);
    const SimGrid grid = ductflow::run(cfg, gas);
    with_output(spec, out, info, [&](std::ostream& csv, std::ostream& summary) {
        emit_csv(grid_rows(grid, gas), gas, csv);
        summary << "steps: " << grid.steps << "\n";
    });
}

void interact(const RunSpec& spec, std::ostream& out, std::ostream& info) {
    const SimConfig cfg = resolve_config(spec);
    const GasConstants gas(cfg.gamma);
    const InteractionInput inp = interaction_input(cfg);
    const ValidationReport report = validate_input(inp, gas);
    const InteractionResult result = resolve(inp, gas);
    const WaveFan& fan = pick(result.fans, spec.solution);

    std::vector<Row> rows;
    const double dx = cfg.dx();
    for (int i = 0; i < cfg.cells; ++i) {
        const double x = cfg.x_lo + (i + 0.5) * dx;
        rows.emplace_back(x, sample_interaction(fan, inp, cfg.initial.x1, cfg.initial.x2, x,
                                                cfg.t_end, gas));
    }
    with_output(spec, out, info, [&](std::ostream& csv, std::ostream& summary) {
        summary << "case: " << to_string(result.tag) << "\n";
        for (const WaveFan& f : result.fans) summary << "pattern: " << f.pattern() << "\n";
        if (report.s0_flagged) {
            summary << "warning: stationary relations between middle and right states off by "
                    << report.s0.max() << " (mass " << report.s0.mass << ", bernoulli "
                    << report.s0.bernoulli << ", kappa " << report.s0.kappa << ")\n";
        }
        emit_csv(rows, gas, csv);
    });
}

void riemann(const RunSpec& spec, std::ostream& out, std::ostream& info) {
    const GasConstants gas(spec.overrides.gamma.value_or(2.0));
    const double t = spec.overrides.t_end.value_or(1.0);
    const DuctRiemannSolutions sol = solve_duct(*spec.left, spec.left->a, *spec.right, spec.right->a, gas);
    const WaveFan& fan = pick(sol.solutions, spec.solution);

    std::vector<Row> rows;
    for (int i = 0; i < spec.samples; ++i) {
        const double x = spec.x_lo + (spec.x_hi - spec.x_lo) * i / (spec.samples - 1);
        const GasState s = t > 0.0 ? sample(fan, x / t, gas)
                                   : (x < 0.0 ? fan.leftmost() : fan.rightmost());
        rows.emplace_back(x, s);
    }
    with_output(spec, out, info, [&](std::ostream& csv, std::ostream& summary) {
        for (const WaveFan& f : sol.solutions) summary << "pattern: " << f.pattern() << "\n";
        summary << "note: " << sol.multiplicity_note << "\n";
        emit_csv(rows, gas, csv);
    });
}

void stationary(const RunSpec& spec, std::ostream& out, std::ostream& info) {
    const GasConstants gas(spec.overrides.gamma.value_or(2.0));
    const GasState& anchor = *spec.left;
    const StationaryPair pair = stationary_jump(anchor, *spec.area, gas);
    with_output(spec, out, info, [&](std::ostream& csv, std::ostream& summary) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "a_min: %.17g\nrho_m: %.17g\n", a_min(anchor, gas),
                      rho_m(anchor, gas));
        summary << buf;
        if (pair.coincident) summary << "note: target equals a_min, both branches sonic\n";
        csv << "branch,a,rho,u,p,kappa,mach\n";
        const auto line = [&](const char* name, const GasState& s) {
            const std::string row = format_row(0.0, s, gas);
            csv << name << row.substr(row.find(','));
        };
        line("supersonic", pair.supersonic);
        line("subsonic", pair.subsonic);
    });
}

}  // namespace

SimConfig resolve_config(const RunSpec& spec) {
    SimConfig cfg = spec.preset ? find_preset(*spec.preset).config : load_config(*spec.config_path);
    if (spec.overrides.cells) cfg.cells = *spec.overrides.cells;
    if (spec.overrides.cfl) cfg.cfl = *spec.overrides.cfl;
    if (spec.overrides.t_end) cfg.t_end = *spec.overrides.t_end;
    if (spec.overrides.gamma) cfg.gamma = *spec.overrides.gamma;
    cfg.validate();
    return cfg;
}

void emit_csv(const std::vector<Row>& rows, const GasConstants& gas, std::ostream& out) {
    out << "x,a,rho,u,p,kappa,mach\n";
    for (const auto& [x, s] : rows) out << format_row(x, s, gas);
}

std::vector<Row> grid_rows(const SimGrid& grid, const GasConstants& gas) {
    const std::vector<GasState> prim = primitives(grid, gas);
    std::vector<Row> rows;
    rows.reserve(prim.size());
    for (std::size_t i = 0; i < prim.size(); ++i) rows.emplace_back(grid.center(i), prim[i]);
    return rows;
}

void run(const RunSpec& spec, std::ostream& out, std::ostream& info) {
    switch (spec.mode) {
        case Mode::Simulate: simulate(spec, out, info); break;
        case Mode::Interact: interact(spec, out, info); break;
        case Mode::Riemann: riemann(spec, out, info); break;
        case Mode::Stationary: stationary(spec, out, info); break;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunSpec spec;
    try {
        spec = parse_args(argc, argv);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nrun 'ductflow --help' for usage\n";
        return 2;
    }
    if (spec.help) {
        out << *spec.help;
        return 0;
    }
    try {
        run(spec, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ductflow::cli
