#pragma once

// Command-line front end: argument parsing, presets, JSON configs and CSV
// output for the ductflow tool.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ductflow/fvm.hpp"
#include "ductflow/gas.hpp"
#include "ductflow/interaction.hpp"

namespace ductflow::cli {

enum class Mode { Simulate, Riemann, Interact, Stationary };

struct Overrides {
    std::optional<int> cells;
    std::optional<double> cfl;
    std::optional<double> t_end;
    std::optional<double> gamma;
};

struct RunSpec {
    Mode mode = Mode::Simulate;
    std::optional<std::string> preset;
    std::optional<std::string> config_path;
    std::string output_path = "-";
    Overrides overrides;
    int samples = 1001;
    // riemann / stationary inputs
    std::optional<GasState> left;
    std::optional<GasState> right;
    std::optional<double> area;
    double x_lo = -1.0;
    double x_hi = 1.0;
    int solution = 0;
    /// Set when --help was requested; nothing else is meaningful then.
    std::optional<std::string> help;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws UsageError on unknown flags, missing or conflicting inputs.
RunSpec parse_args(int argc, const char* const* argv);

/// "rho,u,p" or "rho,u,p,a" (a defaults to 1).
GasState parse_state(std::string_view text);

struct Preset {
    std::string name;
    SimConfig config;
};

const std::vector<Preset>& preset_table();
/// Throws UsageError for an unknown name.
const Preset& find_preset(std::string_view name);

/// JSON document {gamma, domain, x1, x2, left, middle, right, cells, cfl,
/// t_end}. gamma, domain, cells, cfl and each state's a are optional.
/// Throws InvalidInput naming the offending field.
SimConfig parse_config(std::string_view json_text);
SimConfig load_config(const std::string& path);
std::string dump_config(const SimConfig& cfg);

/// Preset or config with the overrides applied, validated.
SimConfig resolve_config(const RunSpec& spec);

InteractionInput interaction_input(const SimConfig& cfg);

using Row = std::pair<double, GasState>;

/// Header x,a,rho,u,p,kappa,mach then one %.17g row per sample.
void emit_csv(const std::vector<Row>& rows, const GasConstants& gas, std::ostream& out);
std::vector<Row> grid_rows(const SimGrid& grid, const GasConstants& gas);

/// Execute a parsed spec. CSV goes to spec.output_path ("-" = `out`);
/// summary lines (pattern, notes) go to `out` when the CSV goes to a file
/// and to `info` otherwise. Runtime failures propagate as exceptions.
void run(const RunSpec& spec, std::ostream& out, std::ostream& info);

/// Full entry point with exit codes: 0 success, 2 usage error, 1 runtime error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ductflow::cli
