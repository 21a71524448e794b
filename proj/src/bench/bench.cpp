#include "bench/bench.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

#include "common/error.hpp"
#include "engines/stepper.hpp"

namespace janus {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string cpu_model() {
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("model name", 0) == 0) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) return line.substr(line.find_first_not_of(' ', colon + 1));
        }
    return "unknown";
}

double time_run(Stepper& stepper, std::uint64_t sweeps) {
    const auto t0 = std::chrono::steady_clock::now();
    stepper.advance(sweeps);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

double BenchReport::ratio(std::size_t row, std::size_t column) const {
    return timings.at(row).median_ns / timings.at(column).median_ns;
}

const std::vector<LiteratureFigure>& fpga_literature() {
    static const std::vector<LiteratureFigure> figures = {
        {"3D Ising EA", "Metropolis", "96^3", "16 ps"},
        {"3D Ising EA", "Heat Bath", "96^3", "16 ps"},
        {"Q=4 3D glassy Potts", "Metropolis", "16^3", "64 ps"},
        {"Q=4 3D disordered Potts", "Metropolis", "88^3", "32 ps"},
        {"Q=4, C_m=4 random graph", "Metropolis", "24000", "2.5 ns"},
    };
    return figures;
}

double median(std::vector<double> values) {
    if (values.empty()) throw DomainError("median of an empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<std::pair<std::string, std::string>> host_descriptor() {
    std::vector<std::pair<std::string, std::string>> host;
    host.emplace_back("cpu", cpu_model());
    host.emplace_back("hardware_threads", std::to_string(std::thread::hardware_concurrency()));
    utsname u{};
    if (uname(&u) == 0) host.emplace_back("os", std::string(u.sysname) + " " + u.release + " " + u.machine);
#if defined(__clang__)
    host.emplace_back("compiler", std::string("clang ") + __clang_version__);
#elif defined(__GNUC__)
    host.emplace_back("compiler", std::string("gcc ") + __VERSION__);
#endif
#ifdef NDEBUG
    host.emplace_back("assertions", "off");
#else
    host.emplace_back("assertions", "on");
#endif
    return host;
}

BenchReport run_bench(const BenchOptions& options) {
    if (options.engines.empty()) throw DomainError("bench needs at least one engine");
    if (options.repetitions < 1) throw DomainError("bench needs at least one repetition");
    if (options.sweeps == 0) throw DomainError("bench needs a positive sweep count");

    ModelRecipe recipe = options.model;
    recipe.coupling_seed = options.seed;
    const ModelSpec model = build_model(recipe);
    const RunSeeds seeds = RunSeeds::derive(options.seed);
    const SpinConfig start = random_config(model.geometry(), model.domain(), model.q(), seeds.init);
    const double sites = static_cast<double>(model.geometry().site_count());

    BenchReport report;
    report.instance = {
        {"model", std::string(to_string(model.kind()))},
        {"L", std::to_string(model.geometry().side())},
        {"N", std::to_string(model.geometry().site_count())},
        {"q", std::to_string(model.q())},
        {"beta", model.beta().to_string()},
        {"seed", std::to_string(options.seed)},
        {"repetitions", std::to_string(options.repetitions)},
    };
    report.host = host_descriptor();

    for (EngineKind engine : options.engines) {
        RunOptions run_options;
        run_options.engine = engine;
        run_options.seeds = seeds;
        run_options.grid_x = options.grid_x;
        run_options.grid_y = options.grid_y;
        run_options.threads = options.threads;
        run_options.lanes = options.lanes;
        run_options.lane_params = recipe.params;

        auto stepper = make_stepper(model, start, run_options);
        stepper->advance(1);  // warm caches and lazily built tables

        EngineTiming timing;
        timing.engine = engine;
        timing.replicas = stepper->replicas();
        timing.sweeps = options.sweeps;
        // Escalate until a single run is comfortably above clock resolution.
        while (time_run(*stepper, timing.sweeps) < options.min_seconds && timing.sweeps < (1ULL << 40))
            timing.sweeps *= 2;
        const double updates = static_cast<double>(timing.sweeps) * sites * timing.replicas;
        for (int r = 0; r < options.repetitions; ++r)
            timing.ns_per_update.push_back(time_run(*stepper, timing.sweeps) * 1e9 / updates);
        timing.median_ns = median(timing.ns_per_update);
        report.timings.push_back(std::move(timing));
    }
    return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
    for (const auto& [k, v] : report.instance) out << "# instance." << k << '=' << v << '\n';
    for (const auto& [k, v] : report.host) out << "# host." << k << '=' << v << '\n';
    out << "engine,sweeps,replicas,median_ns";
    const std::size_t reps = report.timings.empty() ? 0 : report.timings.front().ns_per_update.size();
    for (std::size_t r = 0; r < reps; ++r) out << ",run" << r + 1;
    out << '\n';
    for (const auto& t : report.timings) {
        out << to_string(t.engine) << ',' << t.sweeps << ',' << t.replicas << ',' << fixed(t.median_ns, 4);
        for (double ns : t.ns_per_update) out << ',' << fixed(ns, 4);
        out << '\n';
    }
}

void write_bench_table(std::ostream& out, const BenchReport& report) {
    out << "instance:";
    for (const auto& [k, v] : report.instance) out << ' ' << k << '=' << v;
    out << "\nhost:";
    for (const auto& [k, v] : report.host) out << ' ' << k << "=\"" << v << '"';
    out << "\n\n";

    char line[160];
    std::snprintf(line, sizeof line, "%-14s %12s %9s %16s\n", "engine", "sweeps/run", "replicas", "ns/site-update");
    out << line;
    for (const auto& t : report.timings) {
        std::snprintf(line, sizeof line, "%-14s %12llu %9d %16.4f\n", std::string(to_string(t.engine)).c_str(),
                      static_cast<unsigned long long>(t.sweeps), t.replicas, t.median_ns);
        out << line;
    }

    if (report.timings.size() > 1) {
        out << "\nratio matrix (row time / column time):\n";
        std::snprintf(line, sizeof line, "%-14s", "");
        out << line;
        for (const auto& t : report.timings) {
            std::snprintf(line, sizeof line, " %13s", std::string(to_string(t.engine)).c_str());
            out << line;
        }
        out << '\n';
        for (std::size_t i = 0; i < report.timings.size(); ++i) {
            std::snprintf(line, sizeof line, "%-14s", std::string(to_string(report.timings[i].engine)).c_str());
            out << line;
            for (std::size_t j = 0; j < report.timings.size(); ++j) {
                std::snprintf(line, sizeof line, " %12.2fx", report.ratio(i, j));
                out << line;
            }
            out << '\n';
        }
    }

    out << "\nliterature context (FPGA hardware, published figures, NOT reproducible in software):\n";
    for (const auto& f : fpga_literature()) {
        std::snprintf(line, sizeof line, "  %-26s %-11s %-6s %s per spin update\n", f.model, f.algorithm, f.max_size,
                      f.time_per_update);
        out << line;
    }
}

}  // namespace janus
