#include <CLI11.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "cli.hpp"

namespace ductflow::cli {

GasState parse_state(std::string_view text) {
    std::vector<double> v;
    std::string item;
    const std::string s(text);
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("state '" + s + "': '" + item + "' is not a number");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (v.size() != 3 && v.size() != 4) {
        throw UsageError("state '" + s + "': expected rho,u,p or rho,u,p,a");
    }
    const GasState st{v[0], v[1], v[2], v.size() == 4 ? v[3] : 1.0};
    if (!(st.rho > 0.0) || !(st.p > 0.0) || !(st.a > 0.0) || !std::isfinite(st.u)) {
        throw UsageError("state '" + s + "': rho, p and a must be positive");
    }
    return st;
}

RunSpec parse_args(int argc, const char* const* argv) {
    CLI::App app{"Exact solvers and a finite-volume simulator for duct flow with a cross-section jump",
                 "ductflow"};
    app.require_subcommand(1);

    RunSpec spec;
    std::string preset, config, left, right;
    int cells = 0;
    double cfl = 0.0, t_end = 0.0, gamma = 0.0, area = 0.0;

    const auto add_tuning = [&](CLI::App* sub, bool grid) {
        if (grid) {
            sub->add_option("--cells", cells, "Number of cells")->check(CLI::Range(4, 100000000));
            sub->add_option("--cfl", cfl, "CFL number in (0, 1]")->check(CLI::Range(1e-12, 1.0));
        }
        sub->add_option("--tend", t_end, "End time")->check(CLI::NonNegativeNumber);
        sub->add_option("--gamma", gamma, "Adiabatic exponent in (1, 3)")
            ->check(CLI::Range(1.0 + 1e-12, 3.0 - 1e-12));
        sub->add_option("--out", spec.output_path, "CSV output path, '-' for stdout");
    };
    const auto add_source = [&](CLI::App* sub) {
        auto* p = sub->add_option("--preset", preset, "Preset test1..test7");
        auto* c = sub->add_option("--config", config, "JSON configuration file");
        p->excludes(c);
    };

    auto* simulate = app.add_subcommand("simulate", "Run the finite-volume scheme");
    add_source(simulate);
    add_tuning(simulate, true);

    auto* interact = app.add_subcommand("interact", "Classify and resolve the contact/jump interaction");
    add_source(interact);
    add_tuning(interact, true);
    interact->add_option("--solution", spec.solution, "Index of the fan to sample")
        ->check(CLI::NonNegativeNumber);

    auto* riemann = app.add_subcommand("riemann", "Exact duct Riemann problem with the jump at x = 0");
    riemann->add_option("--left", left, "Left state rho,u,p[,a]")->required();
    riemann->add_option("--right", right, "Right state rho,u,p[,a]")->required();
    riemann->add_option("--samples", spec.samples, "Number of sample points")->check(CLI::Range(2, 100000000));
    riemann->add_option("--xlo", spec.x_lo, "Left end of the sampled window");
    riemann->add_option("--xhi", spec.x_hi, "Right end of the sampled window");
    riemann->add_option("--solution", spec.solution, "Index of the fan to sample")
        ->check(CLI::NonNegativeNumber);
    add_tuning(riemann, false);

    auto* stationary = app.add_subcommand("stationary", "Stationary jump of a state to a new cross-section");
    stationary->add_option("--left", left, "Anchor state rho,u,p[,a]")->required();
    stationary->add_option("--area", area, "Target cross-section")->required()->check(CLI::PositiveNumber);
    stationary->add_option("--gamma", gamma, "Adiabatic exponent in (1, 3)")
        ->check(CLI::Range(1.0 + 1e-12, 3.0 - 1e-12));
    stationary->add_option("--out", spec.output_path, "CSV output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        spec.help = app.help();
        return spec;
    } catch (const CLI::CallForAllHelp&) {
        spec.help = app.help("", CLI::AppFormatMode::All);
        return spec;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    const auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    CLI::App* sub = app.get_subcommands().front();
    if (sub == simulate) spec.mode = Mode::Simulate;
    if (sub == interact) spec.mode = Mode::Interact;
    if (sub == riemann) spec.mode = Mode::Riemann;
    if (sub == stationary) spec.mode = Mode::Stationary;

    if (spec.mode == Mode::Simulate || spec.mode == Mode::Interact) {
        if (given(sub, "--preset")) {
            find_preset(preset);
            spec.preset = preset;
        } else if (given(sub, "--config")) {
            spec.config_path = config;
        } else {
            throw UsageError(sub->get_name() + ": one of --preset or --config is required");
        }
        if (given(sub, "--cells")) spec.overrides.cells = cells;
        if (given(sub, "--cfl")) spec.overrides.cfl = cfl;
    } else {
        spec.left = parse_state(left);
        if (spec.mode == Mode::Riemann) {
            spec.right = parse_state(right);
            if (!(spec.x_lo < spec.x_hi)) throw UsageError("riemann: --xlo must be below --xhi");
        } else {
            spec.area = area;
        }
    }
    if (sub->get_option_no_throw("--tend") && given(sub, "--tend")) spec.overrides.t_end = t_end;
    if (given(sub, "--gamma")) spec.overrides.gamma = gamma;
    return spec;
}

}  // namespace ductflow::cli
