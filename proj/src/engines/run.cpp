#include "engines/run.hpp"

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "bitslice/amsc.hpp"
#include "bitslice/smsc.hpp"
#include "common/error.hpp"
#include "engines/stepper.hpp"
#include "grid/domain_grid.hpp"
#include "model/energy.hpp"

namespace janus {

namespace {

constexpr std::array<std::pair<EngineKind, std::string_view>, 5> kEngineNames{{
    {EngineKind::ScalarHeatBath, "scalar-hb"},
    {EngineKind::ScalarMetropolis, "scalar-metro"},
    {EngineKind::Amsc, "amsc"},
    {EngineKind::Smsc, "smsc"},
    {EngineKind::Grid, "grid"},
}};

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string_view to_string(EngineKind engine) noexcept {
    for (const auto& [k, name] : kEngineNames)
        if (k == engine) return name;
    return "unknown";
}

std::optional<EngineKind> parse_engine_kind(std::string_view name) noexcept {
    for (const auto& [k, n] : kEngineNames)
        if (n == name) return k;
    return std::nullopt;
}

ModelSpec build_model(const ModelRecipe& recipe) {
    return make_model(recipe.kind, recipe.side, recipe.beta, recipe.coupling_seed, recipe.params);
}

RunSeeds RunSeeds::derive(std::uint64_t master) {
    return {master, prng::stream_seed(master, 1), prng::stream_seed(master, 2)};
}

void check_engine_compatibility(const ModelSpec& model, const RunOptions& options) {
    const auto& g = model.geometry();
    const std::string kind(to_string(model.kind()));
    if (g.side() % 2 != 0)
        throw DomainError("checkerboard engines need an even lattice side, got L=" + std::to_string(g.side()));
    if (options.measure_every == 0) throw DomainError("measure-every must be at least 1");
    const bool ising = model.kind() == ModelKind::IsingEA;
    switch (options.engine) {
        case EngineKind::ScalarHeatBath:
            if (!ising) throw IncompatibleError("engine scalar-hb requires an Ising model, got " + kind);
            break;
        case EngineKind::ScalarMetropolis:
            break;
        case EngineKind::Amsc:
            if (!ising) throw IncompatibleError("engine amsc requires an Ising model, got " + kind);
            if (model.couplings().diluted())
                throw IncompatibleError("engine amsc cannot encode site-diluted couplings in one bit");
            if (options.lanes < 1 || options.lanes > kWordLanes)
                throw DomainError("amsc lane count must lie in [1, 64], got " + std::to_string(options.lanes));
            if (options.lane_params.occupation != 1.0)
                throw IncompatibleError("engine amsc cannot encode site-diluted couplings in one bit");
            break;
        case EngineKind::Smsc:
            if (!ising) throw IncompatibleError("engine smsc requires an Ising model, got " + kind);
            if (model.couplings().field_fixed() != 0)
                throw IncompatibleError("engine smsc requires h = 0 (integer Delta E table)");
            if (g.side() > BitPlaneStore::kMaxSide)
                throw IncompatibleError("engine smsc supports L <= 64, got L=" + std::to_string(g.side()));
            break;
        case EngineKind::Grid:
            (void)partition_lattice(g, options.grid_x, options.grid_y);
            break;
    }
    if (options.initial) model.check_config(*options.initial);
}

RunResult run(const ModelSpec& model, const RunOptions& options) {
    check_engine_compatibility(model, options);
    const auto& g = model.geometry();
    SpinConfig start = options.initial ? *options.initial
                                       : random_config(g, model.domain(), model.q(), options.seeds.init);

    const std::unique_ptr<Stepper> stepper = make_stepper(model, start, options);

    RunResult result{Trajectory{}, start};
    Trajectory& t = result.trajectory;
    const auto& c = model.couplings();
    t.set_meta("engine", std::string(to_string(options.engine)));
    t.set_meta("model", std::string(to_string(model.kind())));
    t.set_meta("L", std::to_string(g.side()));
    t.set_meta("q", std::to_string(model.q()));
    t.set_meta("beta", model.beta().to_string());
    t.set_meta("field", format_double(c.field()));
    t.set_meta("diluted", c.diluted() ? "1" : "0");
    t.set_meta("sweeps", std::to_string(options.sweeps));
    t.set_meta("measure_every", std::to_string(options.measure_every));
    t.set_meta("thermalization", std::to_string(options.thermalization.value_or(options.sweeps / 2)));
    t.set_meta("coupling_seed", std::to_string(options.seeds.coupling));
    t.set_meta("dynamics_seed", std::to_string(options.seeds.dynamics));
    t.set_meta("init_seed", std::to_string(options.seeds.init));
    t.set_meta("initial", options.initial ? "snapshot" : "random");
    t.set_meta("couplings_hash", hex64(couplings_fingerprint(c)));
    if (model.domain() == SpinDomain::Ising)
        t.set_meta("heatbath_checksum", hex64(build_heatbath_table(model.beta(), c.field()).checksum()));
    t.set_meta("metropolis_checksum", hex64(build_metropolis_table(model).checksum()));
    if (options.engine == EngineKind::Grid)
        t.set_meta("grid", std::to_string(options.grid_x) + "x" + std::to_string(options.grid_y));
    if (options.engine == EngineKind::Amsc) t.set_meta("lanes", std::to_string(options.lanes));

    const auto record = [&](std::uint64_t sweep, const SpinConfig& config) {
        const Measurement m = measure(model, config);
        t.add({sweep, m.energy, m.magnetization});
    };
    record(0, start);
    std::uint64_t done = 0;
    while (done < options.sweeps) {
        const std::uint64_t chunk = std::min(options.measure_every, options.sweeps - done);
        stepper->advance(chunk);
        done += chunk;
        result.final_config = stepper->current();
        record(done, result.final_config);
    }
    return result;
}

}  // namespace janus
