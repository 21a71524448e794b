#include "bench/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>

#include "common/error.hpp"

namespace janus {

namespace {

std::string_view trim(std::string_view s) noexcept {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view value, Int lo, Int hi) {
    Int v{};
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size() || v < lo || v > hi)
        throw DomainError(std::string(key) + ": expected an integer in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got '" + std::string(value) + "'");
    return v;
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
    return parse_integer<std::uint64_t>(key, value, 0, UINT64_MAX);
}

double parse_real(std::string_view key, std::string_view value) {
    double v = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size())
        throw DomainError(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
    return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw DomainError(std::string(key) + ": expected true or false, got '" + std::string(value) + "'");
}

std::string real_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

RunSeeds RunConfig::seeds() const {
    RunSeeds s = RunSeeds::derive(seed);
    if (coupling_seed) s.coupling = *coupling_seed;
    if (dynamics_seed) s.dynamics = *dynamics_seed;
    if (init_seed) s.init = *init_seed;
    return s;
}

ModelSpec RunConfig::build() const {
    ModelRecipe recipe = model;
    recipe.coupling_seed = seeds().coupling;
    if (couplings_file.empty()) return build_model(recipe);

    std::ifstream in(couplings_file);
    if (!in) throw IoError("cannot open couplings file '" + couplings_file + "'");
    CouplingFile file = read_couplings(in);
    if (file.kind != model.kind)
        throw DomainError("couplings file holds a " + std::string(to_string(file.kind)) + " instance, config asks for " +
                          std::string(to_string(model.kind)));
    if (file.couplings.geometry().side() != model.side)
        throw DomainError("couplings file has L=" + std::to_string(file.couplings.geometry().side()) +
                          ", config asks for L=" + std::to_string(model.side));
    if (model.params.occupation < 1.0)
        throw DomainError("site dilution cannot be combined with a couplings file");
    if (model.params.field != 0.0) file.couplings.set_field(model.params.field);
    return ModelSpec(model.kind, model.beta, std::make_shared<const CouplingSet>(std::move(file.couplings)));
}

RunOptions RunConfig::options() const {
    RunOptions o;
    o.engine = engine;
    o.sweeps = sweeps;
    o.measure_every = measure_every;
    o.thermalization = thermalization;
    o.seeds = seeds();
    o.grid_x = grid_x;
    o.grid_y = grid_y;
    o.threads = threads;
    o.lanes = lanes;
    o.lane_params = model.params;
    return o;
}

const std::vector<std::string>& run_config_keys() {
    static const std::vector<std::string> keys = {
        "model.kind",      "model.L",        "model.q",         "model.beta",          "model.occupation",
        "model.field",     "model.ferromagnetic", "model.couplings", "run.engine",     "run.sweeps",
        "run.measure_every", "run.thermalization", "run.grid",    "run.threads",         "run.lanes",
        "run.initial",     "seeds.master",   "seeds.coupling",  "seeds.dynamics",      "seeds.init",
        "output.trajectory", "output.snapshot",
    };
    return keys;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view raw) {
    const std::string_view value = trim(raw);
    if (key == "model.kind") {
        const auto kind = parse_model_kind(value);
        if (!kind) throw DomainError("model.kind: unknown model '" + std::string(value) + "'");
        c.model.kind = *kind;
    } else if (key == "model.L") {
        c.model.side = parse_integer<int>(key, value, 2, 1024);
    } else if (key == "model.q") {
        c.model.params.q = parse_integer<int>(key, value, 1, 255);
    } else if (key == "model.beta") {
        c.model.beta = parse_beta(std::string(value));
    } else if (key == "model.occupation") {
        const double p = parse_real(key, value);
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("model.occupation must lie in [0, 1]");
        c.model.params.occupation = p;
    } else if (key == "model.field") {
        c.model.params.field = parse_real(key, value);
    } else if (key == "model.ferromagnetic") {
        c.model.params.ferromagnetic = parse_bool(key, value);
    } else if (key == "model.couplings") {
        c.couplings_file = std::string(value);
    } else if (key == "run.engine") {
        const auto engine = parse_engine_kind(value);
        if (!engine)
            throw DomainError("run.engine: unknown engine '" + std::string(value) +
                              "' (scalar-hb, scalar-metro, amsc, smsc, grid)");
        c.engine = *engine;
    } else if (key == "run.sweeps") {
        c.sweeps = parse_u64(key, value);
    } else if (key == "run.measure_every") {
        c.measure_every = parse_integer<std::uint64_t>(key, value, 1, UINT64_MAX);
    } else if (key == "run.thermalization") {
        c.thermalization = parse_u64(key, value);
    } else if (key == "run.grid") {
        const auto x = value.find('x');
        if (x == std::string_view::npos) throw DomainError("run.grid: expected AxB, got '" + std::string(value) + "'");
        c.grid_x = parse_integer<int>(key, value.substr(0, x), 1, 1024);
        c.grid_y = parse_integer<int>(key, value.substr(x + 1), 1, 1024);
    } else if (key == "run.threads") {
        c.threads = parse_integer<int>(key, value, 0, 4096);
    } else if (key == "run.lanes") {
        c.lanes = parse_integer<int>(key, value, 1, 64);
    } else if (key == "run.initial") {
        c.initial_snapshot = std::string(value);
    } else if (key == "seeds.master") {
        c.seed = parse_u64(key, value);
    } else if (key == "seeds.coupling") {
        c.coupling_seed = parse_u64(key, value);
    } else if (key == "seeds.dynamics") {
        c.dynamics_seed = parse_u64(key, value);
    } else if (key == "seeds.init") {
        c.init_seed = parse_u64(key, value);
    } else if (key == "output.trajectory") {
        c.trajectory = std::string(value);
    } else if (key == "output.snapshot") {
        c.final_snapshot = std::string(value);
    } else {
        throw DomainError("unknown setting '" + std::string(key) + "'");
    }
}

RunConfig parse_run_config(std::istream& in, RunConfig config) {
    std::string line;
    std::string section;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') throw ParseError("unterminated section header", number);
            section = std::string(trim(text.substr(1, text.size() - 2)));
            if (section != "model" && section != "run" && section != "seeds" && section != "output")
                throw ParseError("unknown section [" + section + "]", number);
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", number);
        if (section.empty()) throw ParseError("setting outside of any section", number);
        const std::string_view key = trim(text.substr(0, eq));
        if (key.empty()) throw ParseError("missing key before '='", number);
        try {
            apply_setting(config, section + "." + std::string(key), text.substr(eq + 1));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), number);
        }
    }
    return config;
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    return parse_run_config(in, std::move(base));
}

void write_run_config(std::ostream& out, const RunConfig& c) {
    const auto& p = c.model.params;
    out << "[model]\n"
        << "kind = " << to_string(c.model.kind) << '\n'
        << "L = " << c.model.side << '\n'
        << "q = " << p.q << '\n'
        << "beta = " << c.model.beta.to_string() << '\n'
        << "occupation = " << real_text(p.occupation) << '\n'
        << "field = " << real_text(p.field) << '\n'
        << "ferromagnetic = " << (p.ferromagnetic ? "true" : "false") << '\n';
    if (!c.couplings_file.empty()) out << "couplings = " << c.couplings_file << '\n';
    out << "\n[run]\n"
        << "engine = " << to_string(c.engine) << '\n'
        << "sweeps = " << c.sweeps << '\n'
        << "measure_every = " << c.measure_every << '\n';
    if (c.thermalization) out << "thermalization = " << *c.thermalization << '\n';
    out << "grid = " << c.grid_x << 'x' << c.grid_y << '\n'
        << "threads = " << c.threads << '\n'
        << "lanes = " << c.lanes << '\n';
    if (!c.initial_snapshot.empty()) out << "initial = " << c.initial_snapshot << '\n';
    out << "\n[seeds]\nmaster = " << c.seed << '\n';
    if (c.coupling_seed) out << "coupling = " << *c.coupling_seed << '\n';
    if (c.dynamics_seed) out << "dynamics = " << *c.dynamics_seed << '\n';
    if (c.init_seed) out << "init = " << *c.init_seed << '\n';
    out << "\n[output]\ntrajectory = " << c.trajectory << '\n';
    if (!c.final_snapshot.empty()) out << "snapshot = " << c.final_snapshot << '\n';
}

}  // namespace janus
