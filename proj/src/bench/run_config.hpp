#pragma once

// Run configuration text:
//
//   # comment
//   [model]
//   kind = ising-ea
//   L = 8
//   beta = 0.9
//   [run]
//   engine = scalar-hb
//   sweeps = 1000
//
// Keys are addressed as `section.key`; command-line flags go through the
// same apply_setting() so a flag and a file line are interchangeable.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "engines/run.hpp"

namespace janus {

struct RunConfig {
    ModelRecipe model{};
    EngineKind engine = EngineKind::ScalarHeatBath;
    std::uint64_t sweeps = 1000;
    std::uint64_t measure_every = 1;
    std::optional<std::uint64_t> thermalization;
    int grid_x = 4;
    int grid_y = 4;
    int threads = 0;
    int lanes = 64;

    std::uint64_t seed = 1;
    std::optional<std::uint64_t> coupling_seed;
    std::optional<std::uint64_t> dynamics_seed;
    std::optional<std::uint64_t> init_seed;

    std::string couplings_file;    ///< load couplings instead of generating them
    std::string initial_snapshot;  ///< start from this snapshot
    std::string trajectory = "trajectory.csv";
    std::string final_snapshot;    ///< written after the run when set

    RunSeeds seeds() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
    /// Builds the model, reading `couplings_file` if set. Throws on I/O or
    /// parse failures and when the file's kind disagrees with `model.kind`.
    ModelSpec build() const;
    /// Options for run(); does not load the initial snapshot.
    RunOptions options() const;
};

/// Every key accepted by apply_setting, as `section.key`.
const std::vector<std::string>& run_config_keys();

/// Throws DomainError naming the key for unknown keys or bad values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Throws ParseError with the line number.
RunConfig parse_run_config(std::istream& in, RunConfig base = {});
RunConfig load_run_config(const std::string& path, RunConfig base = {});

/// Canonical text form; parse_run_config(write_run_config(c)) == c.
void write_run_config(std::ostream& out, const RunConfig& config);

}  // namespace janus
