#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "engines/run.hpp"

namespace janus {

struct BenchOptions {
    ModelRecipe model{};
    std::vector<EngineKind> engines{EngineKind::ScalarHeatBath, EngineKind::Amsc};
    /// Starting sweep count; doubled until one timed run lasts min_seconds.
    std::uint64_t sweeps = 4;
    double min_seconds = 0.05;
    int repetitions = 5;
    std::uint64_t seed = 1;
    int grid_x = 2;
    int grid_y = 2;
    int threads = 0;
    int lanes = 64;
};

struct EngineTiming {
    EngineKind engine{};
    std::uint64_t sweeps = 0;   ///< per timed run, after escalation
    int replicas = 1;           ///< systems advanced per sweep
    std::vector<double> ns_per_update;  ///< one entry per repetition
    double median_ns = 0.0;
};

struct BenchReport {
    std::vector<std::pair<std::string, std::string>> instance;
    std::vector<std::pair<std::string, std::string>> host;
    std::vector<EngineTiming> timings;

    /// median(row) / median(column): how many times slower `row` is.
    double ratio(std::size_t row, std::size_t column) const;
};

/// Published FPGA single-spin update times, quoted for context only; they are
/// silicon measurements and are not reproduced by anything in this program.
struct LiteratureFigure {
    const char* model;
    const char* algorithm;
    const char* max_size;
    const char* time_per_update;
};
const std::vector<LiteratureFigure>& fpga_literature();

double median(std::vector<double> values);

/// Every engine runs on the same instance and start configuration. The
/// reported time is wall-clock / (sweeps * N * replicas). Throws DomainError
/// on an empty engine list and IncompatibleError for unusable engines.
BenchReport run_bench(const BenchOptions& options);

std::vector<std::pair<std::string, std::string>> host_descriptor();

/// `engine,sweeps,replicas,median_ns,run1,...` plus `#`-prefixed
/// descriptor lines.
void write_bench_csv(std::ostream& out, const BenchReport& report);
/// Descriptor block, per-engine medians, the ratio matrix and the labeled
/// literature figures.
void write_bench_table(std::ostream& out, const BenchReport& report);

}  // namespace janus
