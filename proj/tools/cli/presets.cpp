#include <algorithm>

#include "cli.hpp"

namespace ductflow::cli {

namespace {

Preset make(std::string name, GasState left, GasState middle, GasState right, double t_end) {
    SimConfig cfg;
    cfg.t_end = t_end;
    cfg.initial = ThreeStateInit{2.9, 3.0, left, middle, right};
    return Preset{std::move(name), cfg};
}

}  // namespace

const std::vector<Preset>& preset_table() {
    static const std::vector<Preset> table = {
        make("test1", {2.25, 5.0, 5.0, 1.0}, {1.0, 5.0, 5.0, 1.0}, {0.688168, 5.589, 2.3679, 1.5}, 0.35),
        make("test2", {0.75, 5.0, 5.0, 1.0}, {1.0, 5.0, 5.0, 1.0}, {0.688168, 5.589, 2.3679, 1.3}, 0.35),
        make("test3", {0.25, 5.0, 5.0, 1.0}, {1.0, 5.0, 5.0, 1.0}, {0.688168, 5.589, 2.3679, 1.5}, 0.5),
        make("test4", {1.075, 1.5, 5.0, 1.0}, {1.0, 1.5, 5.0, 1.0}, {1.0687, 0.9357, 4.3777, 1.5}, 1.0),
        make("test5", {1.0, 4.0, 10.0, 1.0}, {1.2, 4.0, 10.0, 1.0}, {1.63872, 1.9527, 18.6486, 1.5}, 0.5),
        make("test6", {7.0, 1.5, 5.0, 1.0}, {1.0, 1.5, 5.0, 1.0}, {1.0687, 0.9375, 4.3777, 1.5}, 1.0),
        make("test7", {1.5, 4.0, 10.0, 1.0}, {1.2, 4.0, 10.0, 1.0}, {1.63872, 1.9527, 18.6486, 1.5}, 0.5),
    };
    return table;
}

const Preset& find_preset(std::string_view name) {
    const auto& table = preset_table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const Preset& p) { return p.name == name; });
    if (it == table.end()) {
        throw UsageError("unknown preset '" + std::string(name) + "' (expected test1..test7)");
    }
    return *it;
}

}  // namespace ductflow::cli
