#pragma once

// Engine-independent driver: thermalize/measure loop, seed derivation and
// trajectory metadata. Every engine maps onto the same per-site stream
// routing, so for the same seeds scalar-hb, amsc (lane 0) and grid produce
// the same Ising heat-bath trajectory, and scalar-metro, smsc (replica 1)
// and grid produce the same Metropolis trajectory.

#include <cstdint>
#include <optional>
#include <string_view>

#include "model/couplings.hpp"
#include "model/model.hpp"
#include "observables/trajectory.hpp"

namespace janus {

enum class EngineKind : std::uint8_t { ScalarHeatBath, ScalarMetropolis, Amsc, Smsc, Grid };

std::string_view to_string(EngineKind engine) noexcept;
std::optional<EngineKind> parse_engine_kind(std::string_view name) noexcept;

/// How the instance was built, so it can be rebuilt and recorded.
struct ModelRecipe {
    ModelKind kind = ModelKind::IsingEA;
    int side = 8;
    Beta beta{};
    CouplingParams params{};
    std::uint64_t coupling_seed = 0;

    friend bool operator==(const ModelRecipe&, const ModelRecipe&) = default;
};

ModelSpec build_model(const ModelRecipe& recipe);

/// Seeds used by a run. Unless given explicitly, the dynamics and initial
/// configuration seeds derive from the master seed as stream_seed(seed, 1)
/// and stream_seed(seed, 2); the coupling seed is the master seed itself.
struct RunSeeds {
    std::uint64_t coupling = 0;
    std::uint64_t dynamics = 0;
    std::uint64_t init = 0;

    static RunSeeds derive(std::uint64_t master);
};

struct RunOptions {
    EngineKind engine = EngineKind::ScalarHeatBath;
    std::uint64_t sweeps = 0;
    std::uint64_t measure_every = 1;
    /// Sweeps discarded by analysis; defaults to sweeps / 2. Recorded only;
    /// the trajectory keeps every measurement.
    std::optional<std::uint64_t> thermalization;
    RunSeeds seeds{};
    /// Start here instead of a random configuration drawn from seeds.init.
    std::optional<SpinConfig> initial;

    int grid_x = 4;
    int grid_y = 4;
    int threads = 0;

    /// AMSC lanes. Lane 0 carries the model's own couplings and initial
    /// configuration; lane k > 0 gets couplings generated from
    /// stream_seed(seeds.coupling, k) with `lane_params` and a start from
    /// stream_seed(seeds.init, k).
    int lanes = 64;
    CouplingParams lane_params{};
};

struct RunResult {
    Trajectory trajectory;
    SpinConfig final_config;
};

/// Throws IncompatibleError when the engine cannot simulate the model
/// (heat-bath and multi-spin engines need Ising; AMSC rejects dilution; SMSC
/// needs h = 0 and L <= 64) and DomainError for bad options.
void check_engine_compatibility(const ModelSpec& model, const RunOptions& options);

/// Records the initial configuration as sweep 0, then one sample after
/// every `measure_every` sweeps (and after the last sweep).
RunResult run(const ModelSpec& model, const RunOptions& options);

}  // namespace janus
