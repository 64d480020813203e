#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ductflow/errors.hpp"

namespace ductflow::cli {

namespace {

using nlohmann::json;

double number(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InvalidInput(path + key + ": missing");
    if (!it->is_number()) throw InvalidInput(path + key + ": must be a number");
    return it->get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& path) {
    return obj.contains(key) ? number(obj, key, path) : fallback;
}

GasState state(const json& doc, const std::string& key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw InvalidInput(key + ": missing");
    if (!it->is_object()) throw InvalidInput(key + ": must be an object {rho, u, p, a}");
    const std::string path = key + ".";
    return GasState{number(*it, "rho", path), number(*it, "u", path), number(*it, "p", path),
                    number_or(*it, "a", 1.0, path)};
}

json state_json(const GasState& s) { return json{{"rho", s.rho}, {"u", s.u}, {"p", s.p}, {"a", s.a}}; }

}  // namespace

SimConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed config: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("config: top level must be an object");

    SimConfig cfg;
    cfg.gamma = number_or(doc, "gamma", cfg.gamma, "");
    if (doc.contains("domain")) {
        const json& d = doc["domain"];
        if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
            throw InvalidInput("domain: must be [x_lo, x_hi]");
        }
        cfg.x_lo = d[0].get<double>();
        cfg.x_hi = d[1].get<double>();
    }
    if (doc.contains("cells")) {
        if (!doc["cells"].is_number_integer()) throw InvalidInput("cells: must be an integer");
        cfg.cells = doc["cells"].get<int>();
    }
    cfg.cfl = number_or(doc, "cfl", cfg.cfl, "");
    cfg.t_end = number(doc, "t_end", "");
    cfg.initial.x1 = number(doc, "x1", "");
    cfg.initial.x2 = number(doc, "x2", "");
    cfg.initial.left = state(doc, "left");
    cfg.initial.middle = state(doc, "middle");
    cfg.initial.right = state(doc, "right");
    cfg.validate();
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string dump_config(const SimConfig& cfg) {
    const json doc{{"gamma", cfg.gamma},
                   {"domain", {cfg.x_lo, cfg.x_hi}},
                   {"x1", cfg.initial.x1},
                   {"x2", cfg.initial.x2},
                   {"left", state_json(cfg.initial.left)},
                   {"middle", state_json(cfg.initial.middle)},
                   {"right", state_json(cfg.initial.right)},
                   {"cells", cfg.cells},
                   {"cfl", cfg.cfl},
                   {"t_end", cfg.t_end}};
    return doc.dump(2);
}

InteractionInput interaction_input(const SimConfig& cfg) {
    const ThreeStateInit& in = cfg.initial;
    return InteractionInput{in.left, in.middle, in.right, in.middle.a, in.right.a};
}

}  // namespace ductflow::cli
