#include <cstdio>
#include <deque>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "janus/janus.h"

namespace {

/// Flags that map one-to-one onto configuration keys. They are applied after
/// the configuration file, so a flag always wins.
struct Setting {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr Setting kModelSettings[] = {
    {"--model", "model.kind", "ising-ea | potts | glassy-potts | chiral-potts"},
    {"--L", "model.L", "lattice side"},
    {"--q", "model.q", "number of states (Potts family)"},
    {"--beta", "model.beta", "inverse temperature, or inf"},
    {"--occupation", "model.occupation", "site occupation probability (dilution)"},
    {"--field", "model.field", "uniform field h (Ising)"},
    {"--ferromagnetic", "model.ferromagnetic", "true for J = +1 on every bond"},
    {"--couplings", "model.couplings", "read couplings from this file"},
    {"--seed", "seeds.master", "master seed"},
    {"--coupling-seed", "seeds.coupling", "override the coupling seed"},
};

constexpr Setting kRunSettings[] = {
    {"--engine", "run.engine", "scalar-hb | scalar-metro | amsc | smsc | grid"},
    {"--sweeps", "run.sweeps", "number of sweeps"},
    {"--measure-every", "run.measure_every", "sweeps between samples"},
    {"--thermalization", "run.thermalization", "sweeps discarded by analysis (default sweeps/2)"},
    {"--grid", "run.grid", "grid engine shape, e.g. 4x4"},
    {"--threads", "run.threads", "grid engine threads (0 = one per subdomain)"},
    {"--lanes", "run.lanes", "amsc lanes (1..64)"},
    {"--initial", "run.initial", "start from this snapshot"},
    {"--dynamics-seed", "seeds.dynamics", "override the dynamics seed"},
    {"--init-seed", "seeds.init", "override the initial-configuration seed"},
    {"--out", "output.trajectory", "trajectory CSV path (metadata goes to <path>.meta)"},
    {"--snapshot-out", "output.snapshot", "write the final configuration here"},
};

class ConfigFlags {
public:
    void add(CLI::App* app, const Setting* begin, const Setting* end) {
        if (!file_option_) file_option_ = app->add_option("--config", file_, "key = value configuration file");
        for (const Setting* s = begin; s != end; ++s) {
            values_.emplace_back(s->key, std::string{});
            auto& slot = values_.back();
            app->add_option(s->flag, slot.second, s->help)->each([this, key = s->key](const std::string&) {
                given_.push_back(key);
            });
        }
    }

    /// Builds the configuration: defaults, then file, then flags.
    janus_config* build(const std::vector<std::pair<std::string, std::string>>& extra = {}) const {
        janus_config* config = nullptr;
        check(janus_config_create(&config));
        if (!file_.empty()) check(janus_config_load(config, file_.c_str()), config);
        for (const auto& [key, value] : extra) check(janus_config_set(config, key.c_str(), value.c_str()), config);
        for (const auto& key : given_)
            for (const auto& [k, v] : values_)
                if (k == key) check(janus_config_set(config, k.c_str(), v.c_str()), config);
        return config;
    }

private:
    static void check(janus_status status, janus_config* config = nullptr) {
        if (status == JANUS_OK) return;
        janus_config_destroy(config);
        throw std::runtime_error(janus_last_error());
    }

    CLI::Option* file_option_ = nullptr;
    std::string file_;
    // Deque: CLI11 keeps references to the stored strings.
    std::deque<std::pair<std::string, std::string>> values_;
    std::vector<std::string> given_;
};

struct ConfigHandle {
    janus_config* ptr;
    ~ConfigHandle() { janus_config_destroy(ptr); }
};

int report(janus_status status) {
    if (status == JANUS_OK) return 0;
    std::cerr << "janus: " << janus_status_string(status) << ": " << janus_last_error() << '\n';
    return status == JANUS_ERR_INCOMPATIBLE ? 3 : 1;
}

std::string take(char* text) {
    std::string s = text ? text : "";
    janus_string_free(text);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-model Monte Carlo engines and benchmark harness"};
    app.require_subcommand(1);
    app.set_version_flag("--version", janus_version());

    // run
    ConfigFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "simulate and write a trajectory");
    run_flags.add(run, std::begin(kModelSettings), std::end(kModelSettings));
    run_flags.add(run, std::begin(kRunSettings), std::end(kRunSettings));
    bool print_config = false;
    run->add_flag("--print-config", print_config, "print the effective configuration before running");

    // bench
    ConfigFlags bench_flags;
    CLI::App* bench = app.add_subcommand("bench", "ns per site update for several engines on one instance");
    bench_flags.add(bench, std::begin(kModelSettings), std::end(kModelSettings));
    std::string engines = "scalar-hb,amsc";
    int repetitions = 5;
    double min_seconds = 0.05;
    std::string bench_csv;
    std::string grid_shape;
    bench->add_option("--engines", engines, "comma-separated engine list")->capture_default_str();
    bench->add_option("--repetitions", repetitions, "timed runs per engine (median reported)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--min-seconds", min_seconds, "minimum duration of one timed run")->capture_default_str();
    bench->add_option("--grid", grid_shape, "grid engine shape, e.g. 2x2");
    bench->add_option("--csv", bench_csv, "also write the report as CSV");

    // color
    CLI::App* color = app.add_subcommand("color", "anneal a graph coloring (antiferromagnetic Potts)");
    std::string graph_path, graph_out, solution_out;
    std::uint64_t vertices = 16000;
    double connectivity = 4.0;
    int colors = 3;
    std::uint64_t color_seed = 1;
    double beta_start = 3.0, beta_end = 9.0;
    std::uint64_t steps = 100, sweeps_per_step = 100;
    color->add_option("--graph", graph_path, "edge list to color (default: planted random graph)");
    color->add_option("--vertices", vertices, "planted graph size")->capture_default_str();
    color->add_option("--connectivity", connectivity, "planted graph mean connectivity C_m")->capture_default_str();
    color->add_option("--colors", colors, "number of colors Q")->capture_default_str();
    color->add_option("--seed", color_seed, "graph, start and dynamics seed")->capture_default_str();
    color->add_option("--beta-start", beta_start, "schedule start")->capture_default_str();
    color->add_option("--beta-end", beta_end, "schedule end")->capture_default_str();
    color->add_option("--steps", steps, "schedule steps")->capture_default_str();
    color->add_option("--sweeps-per-step", sweeps_per_step, "sweeps at each beta")->capture_default_str();
    color->add_option("--graph-out", graph_out, "write the graph as an edge list");
    color->add_option("--solution-out", solution_out, "write `vertex color` lines of the best coloring");

    // oracle
    ConfigFlags oracle_flags;
    CLI::App* oracle = app.add_subcommand("oracle", "exact averages by enumeration (q^N <= 2^24)");
    oracle_flags.add(oracle, std::begin(kModelSettings), std::end(kModelSettings));
    std::vector<std::string> observables;
    oracle->add_option("--observable", observables,
                       "energy, energy2, magnetization, abs-magnetization, logz, energy-fd (repeatable)");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "cross-engine bit-exactness and statistical oracle checks");
    std::string fault;
    verify->add_option("--inject-fault", fault, "corrupt a constant to show the suite catches it")
        ->check(CLI::IsMember({"hb-table"}));

    // snapshot
    CLI::App* snapshot = app.add_subcommand("snapshot", "write, inspect and evaluate configuration snapshots");
    snapshot->require_subcommand(1);
    ConfigFlags snap_write_flags;
    CLI::App* snap_write = snapshot->add_subcommand("write", "write the configured run's initial configuration");
    snap_write_flags.add(snap_write, std::begin(kModelSettings), std::end(kModelSettings));
    snap_write_flags.add(snap_write, std::begin(kRunSettings) + 7, std::begin(kRunSettings) + 10);
    std::string snap_path;
    snap_write->add_option("path", snap_path, "output file")->required();
    CLI::App* snap_info = snapshot->add_subcommand("info", "validate a snapshot and print its header");
    snap_info->add_option("path", snap_path, "snapshot file")->required();
    ConfigFlags snap_energy_flags;
    CLI::App* snap_energy = snapshot->add_subcommand("energy", "energy of a snapshot under the configured model");
    snap_energy_flags.add(snap_energy, std::begin(kModelSettings), std::end(kModelSettings));
    snap_energy->add_option("path", snap_path, "snapshot file")->required();
    ConfigFlags couplings_flags;
    CLI::App* couplings = snapshot->add_subcommand("couplings", "write the configured instance's couplings");
    couplings_flags.add(couplings, std::begin(kModelSettings), std::end(kModelSettings));
    couplings->add_option("path", snap_path, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            ConfigHandle config{run_flags.build()};
            if (print_config) {
                char* text = nullptr;
                if (const auto st = janus_config_to_string(config.ptr, &text); st != JANUS_OK) return report(st);
                std::cout << take(text) << '\n';
            }
            janus_run_summary summary{};
            if (const auto st = janus_run(config.ptr, &summary); st != JANUS_OK) return report(st);
            std::printf("sweeps %llu, samples %llu, final E %.6g, ", static_cast<unsigned long long>(summary.sweeps),
                        static_cast<unsigned long long>(summary.samples), summary.final_energy);
            if (summary.averaged == 0)
                std::printf("no samples after thermalization\n");
            else
                std::printf("<E> %.6g +/- %.2g over %llu samples after thermalization\n", summary.mean_energy,
                            summary.mean_energy_error, static_cast<unsigned long long>(summary.averaged));
            return 0;
        }

        if (*bench) {
            std::vector<std::pair<std::string, std::string>> extra;
            if (!grid_shape.empty()) extra.emplace_back("run.grid", grid_shape);
            ConfigHandle config{bench_flags.build(extra)};
            const janus_bench_params params{engines.c_str(), repetitions, min_seconds};
            janus_bench_result* result = nullptr;
            if (const auto st = janus_bench(config.ptr, &params, &result); st != JANUS_OK) return report(st);
            char* text = nullptr;
            janus_bench_table(result, &text);
            std::cout << take(text);
            if (!bench_csv.empty()) {
                janus_bench_csv(result, &text);
                const std::string csv = take(text);
                std::FILE* f = std::fopen(bench_csv.c_str(), "wb");
                if (!f || std::fwrite(csv.data(), 1, csv.size(), f) != csv.size()) {
                    if (f) std::fclose(f);
                    janus_bench_destroy(result);
                    std::cerr << "janus: cannot write '" << bench_csv << "'\n";
                    return 1;
                }
                std::fclose(f);
            }
            janus_bench_destroy(result);
            return 0;
        }

        if (*color) {
            janus_color_params params{};
            params.graph_path = graph_path.empty() ? nullptr : graph_path.c_str();
            params.vertices = graph_path.empty() ? vertices : 0;
            params.connectivity = connectivity;
            params.colors = colors;
            params.seed = color_seed;
            params.beta_start = beta_start;
            params.beta_end = beta_end;
            params.steps = steps;
            params.sweeps_per_step = sweeps_per_step;
            params.graph_out = graph_out.empty() ? nullptr : graph_out.c_str();
            params.solution_out = solution_out.empty() ? nullptr : solution_out.c_str();
            janus_color_result r{};
            if (const auto st = janus_color(&params, &r); st != JANUS_OK) return report(st);
            std::printf("vertices %llu, edges %llu, independent subsets %llu\n",
                        static_cast<unsigned long long>(r.vertices), static_cast<unsigned long long>(r.edges),
                        static_cast<unsigned long long>(r.subsets));
            std::printf("energy %llu -> best %llu after %llu sweeps: %s\n",
                        static_cast<unsigned long long>(r.initial_energy),
                        static_cast<unsigned long long>(r.best_energy),
                        static_cast<unsigned long long>(r.sweeps_run), r.success ? "proper coloring found" : "not solved");
            return 0;
        }

        if (*oracle) {
            ConfigHandle config{oracle_flags.build()};
            if (observables.empty()) observables = {"energy", "energy2", "logz"};
            for (const auto& name : observables) {
                double value = 0.0;
                if (const auto st = janus_oracle(config.ptr, name.c_str(), &value); st != JANUS_OK) return report(st);
                std::printf("%s %.17g\n", name.c_str(), value);
            }
            return 0;
        }

        if (*verify) {
            int all = 0;
            const auto print = [](const char* name, int passed, const char* detail, double seconds, void*) {
                std::printf("%s %-38s %7.2fs  %s\n", passed ? "PASS" : "FAIL", name, seconds, detail);
                std::fflush(stdout);
            };
            if (const auto st = janus_verify(fault.c_str(), print, nullptr, &all); st != JANUS_OK) return report(st);
            std::printf("%s\n", all ? "all checks passed" : "verification FAILED");
            return all ? 0 : 1;
        }

        if (*snap_write) {
            ConfigHandle config{snap_write_flags.build()};
            return report(janus_snapshot_write_initial(config.ptr, snap_path.c_str()));
        }
        if (*snap_info) {
            janus_snapshot_info info{};
            if (const auto st = janus_snapshot_read_info(snap_path.c_str(), &info); st != JANUS_OK) return report(st);
            std::printf("kind %s, L %d, q %d, sites %llu", info.kind, info.side, info.q,
                        static_cast<unsigned long long>(info.sites));
            if (info.q == 2 && std::string(info.kind) == "ising-ea") std::printf(", magnetization %.6g", info.magnetization);
            std::printf("\n");
            return 0;
        }
        if (*snap_energy) {
            ConfigHandle config{snap_energy_flags.build()};
            double e = 0.0;
            if (const auto st = janus_snapshot_energy(config.ptr, snap_path.c_str(), &e); st != JANUS_OK)
                return report(st);
            std::printf("%.17g\n", e);
            return 0;
        }
        if (*couplings) {
            ConfigHandle config{couplings_flags.build()};
            return report(janus_couplings_write(config.ptr, snap_path.c_str()));
        }
    } catch (const std::exception& e) {
        std::cerr << "janus: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
