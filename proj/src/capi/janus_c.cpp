#include "janus/janus.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "bench/bench.hpp"
#include "bench/run_config.hpp"
#include "bench/snapshot.hpp"
#include "bench/trajectory_io.hpp"
#include "bench/verify.hpp"
#include "coloring/coloring.hpp"
#include "common/error.hpp"
#include "model/energy.hpp"
#include "observables/exact.hpp"
#include "observables/statistics.hpp"

struct janus_config {
    janus::RunConfig config;
};

struct janus_bench_result {
    janus::BenchReport report;
    std::vector<std::string> names;
};

struct janus_prng {
    janus::prng::PRWheel wheel;
};

namespace {

thread_local std::string g_last_error;

janus_status fail(janus_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

/// Maps the library's exception hierarchy onto status codes.
template <typename F>
janus_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return JANUS_OK;
    } catch (const janus::IncompatibleError& e) {
        return fail(JANUS_ERR_INCOMPATIBLE, e.what());
    } catch (const janus::TooLargeError& e) {
        return fail(JANUS_ERR_TOO_LARGE, e.what());
    } catch (const janus::DomainError& e) {
        return fail(JANUS_ERR_DOMAIN, e.what());
    } catch (const janus::ParseError& e) {
        return fail(JANUS_ERR_PARSE, e.what());
    } catch (const janus::IoError& e) {
        return fail(JANUS_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(JANUS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(JANUS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(JANUS_ERR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

janus::Snapshot load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw janus::IoError("cannot open snapshot '" + path + "'");
    try {
        return janus::read_snapshot(in);
    } catch (const janus::ParseError& e) {
        throw janus::ParseError(path + ": " + e.message(), e.line());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw janus::IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush()) throw janus::IoError("failed writing '" + path + "'");
}

janus::SpinConfig initial_config(const janus::RunConfig& c, const janus::ModelSpec& model) {
    if (c.initial_snapshot.empty())
        return janus::random_config(model.geometry(), model.domain(), model.q(), c.seeds().init);
    janus::Snapshot snap = load_snapshot(c.initial_snapshot);
    if (janus::domain_of(snap.kind) != model.domain() || snap.config.q() != model.q() ||
        snap.config.geometry() != model.geometry())
        throw janus::DomainError("snapshot '" + c.initial_snapshot + "' (" + std::string(janus::to_string(snap.kind)) +
                                 ", L=" + std::to_string(snap.config.geometry().side()) +
                                 ", q=" + std::to_string(snap.config.q()) + ") does not fit the configured model");
    return std::move(snap.config);
}

}  // namespace

extern "C" {

const char* janus_version(void) { return "1.0.0"; }

const char* janus_status_string(janus_status status) {
    switch (status) {
        case JANUS_OK: return "ok";
        case JANUS_ERR_INVALID_ARGUMENT: return "invalid argument";
        case JANUS_ERR_DOMAIN: return "domain error";
        case JANUS_ERR_INCOMPATIBLE: return "incompatible engine and model";
        case JANUS_ERR_TOO_LARGE: return "too large";
        case JANUS_ERR_IO: return "i/o error";
        case JANUS_ERR_PARSE: return "parse error";
        case JANUS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* janus_last_error(void) { return g_last_error.c_str(); }

void janus_string_free(char* text) { std::free(text); }

janus_status janus_config_create(janus_config** out) {
    if (!out) return fail(JANUS_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = new janus_config{}; });
}

void janus_config_destroy(janus_config* config) { delete config; }

janus_status janus_config_load(janus_config* config, const char* path) {
    if (!config || !path) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config or path");
    return guarded([&] { config->config = janus::load_run_config(path, config->config); });
}

janus_status janus_config_set(janus_config* config, const char* key, const char* value) {
    if (!config || !key || !value) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config, key or value");
    return guarded([&] { janus::apply_setting(config->config, key, value); });
}

janus_status janus_config_to_string(const janus_config* config, char** out) {
    if (!config || !out) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config or output pointer");
    return guarded([&] {
        std::ostringstream text;
        janus::write_run_config(text, config->config);
        *out = copy_string(text.str());
    });
}

janus_status janus_run(const janus_config* config, janus_run_summary* summary) {
    if (!config) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config");
    return guarded([&] {
        const janus::RunConfig& c = config->config;
        const janus::ModelSpec model = c.build();
        janus::RunOptions options = c.options();
        janus::check_engine_compatibility(model, options);
        if (!c.initial_snapshot.empty()) options.initial = initial_config(c, model);
        const janus::RunResult result = janus::run(model, options);

        janus::save_trajectory(c.trajectory, result.trajectory);
        if (!c.final_snapshot.empty()) {
            std::ostringstream text;
            janus::write_snapshot(text, model.kind(), result.final_config);
            write_file(c.final_snapshot, text.str());
        }
        if (summary) {
            const auto& samples = result.trajectory.samples();
            *summary = {};
            summary->samples = samples.size();
            summary->sweeps = c.sweeps;
            summary->final_energy = samples.back().energy;
            const std::uint64_t therm = c.thermalization.value_or(c.sweeps / 2);
            std::vector<double> kept;
            for (const auto& s : samples)
                if (s.sweep >= therm) kept.push_back(s.energy);
            summary->averaged = kept.size();
            if (kept.size() >= 2) {
                const janus::Estimate e = janus::mc_average(kept);
                summary->mean_energy = e.mean;
                summary->mean_energy_error = e.error;
            } else if (!kept.empty()) {
                summary->mean_energy = kept.front();
            }
        }
    });
}

janus_status janus_couplings_write(const janus_config* config, const char* path) {
    if (!config || !path) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config or path");
    return guarded([&] {
        const janus::ModelSpec model = config->config.build();
        std::ostringstream text;
        janus::write_couplings(text, model.kind(), model.couplings(), config->config.seeds().coupling);
        write_file(path, text.str());
    });
}

janus_status janus_snapshot_write_initial(const janus_config* config, const char* path) {
    if (!config || !path) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config or path");
    return guarded([&] {
        const janus::ModelSpec model = config->config.build();
        std::ostringstream text;
        janus::write_snapshot(text, model.kind(), initial_config(config->config, model));
        write_file(path, text.str());
    });
}

janus_status janus_snapshot_read_info(const char* path, janus_snapshot_info* info) {
    if (!path || !info) return fail(JANUS_ERR_INVALID_ARGUMENT, "null path or info");
    return guarded([&] {
        const janus::Snapshot snap = load_snapshot(path);
        *info = {};
        const std::string kind(janus::to_string(snap.kind));
        std::snprintf(info->kind, sizeof info->kind, "%s", kind.c_str());
        info->side = snap.config.geometry().side();
        info->q = snap.config.q();
        info->sites = snap.config.size();
        if (snap.config.domain() == janus::SpinDomain::Ising) info->magnetization = janus::magnetization(snap.config);
    });
}

janus_status janus_snapshot_energy(const janus_config* config, const char* path, double* energy) {
    if (!config || !path || !energy) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config, path or output");
    return guarded([&] {
        const janus::ModelSpec model = config->config.build();
        const janus::Snapshot snap = load_snapshot(path);
        if (snap.kind != model.kind())
            throw janus::DomainError("snapshot holds a " + std::string(janus::to_string(snap.kind)) +
                                     " configuration, model is " + std::string(janus::to_string(model.kind())));
        model.check_config(snap.config);
        *energy = janus::total_energy(model, snap.config);
    });
}

janus_status janus_oracle(const janus_config* config, const char* observable, double* value) {
    if (!config || !observable || !value) return fail(JANUS_ERR_INVALID_ARGUMENT, "null config, observable or output");
    return guarded([&] {
        const janus::ModelSpec model = config->config.build();
        const std::string name = observable;
        using janus::Observable;
        if (name == "energy")
            *value = janus::exact_boltzmann_average(model, Observable::Energy);
        else if (name == "energy2")
            *value = janus::exact_boltzmann_average(model, Observable::EnergySquared);
        else if (name == "magnetization")
            *value = janus::exact_boltzmann_average(model, Observable::Magnetization);
        else if (name == "abs-magnetization")
            *value = janus::exact_boltzmann_average(model, Observable::AbsMagnetization);
        else if (name == "logz")
            *value = static_cast<double>(janus::log_partition_function(model));
        else if (name == "energy-fd")
            *value = janus::energy_from_log_z(model, 1e-4);
        else
            throw janus::DomainError("unknown observable '" + name +
                                     "' (energy, energy2, magnetization, abs-magnetization, logz, energy-fd)");
    });
}

janus_status janus_bench(const janus_config* config, const janus_bench_params* params, janus_bench_result** out) {
    if (!config || !params || !out || !params->engines)
        return fail(JANUS_ERR_INVALID_ARGUMENT, "null config, params, engine list or output");
    return guarded([&] {
        const janus::RunConfig& c = config->config;
        janus::BenchOptions options;
        options.model = c.model;
        options.seed = c.seeds().coupling;
        options.grid_x = c.grid_x;
        options.grid_y = c.grid_y;
        options.threads = c.threads;
        options.lanes = c.lanes;
        options.repetitions = params->repetitions == 0 ? 5 : params->repetitions;
        if (params->min_seconds > 0) options.min_seconds = params->min_seconds;
        options.engines.clear();
        std::stringstream list(params->engines);
        std::string name;
        while (std::getline(list, name, ',')) {
            if (name.empty()) continue;
            const auto engine = janus::parse_engine_kind(name);
            if (!engine) throw janus::DomainError("unknown engine '" + name + "'");
            options.engines.push_back(*engine);
        }
        auto result = std::make_unique<janus_bench_result>();
        result->report = janus::run_bench(options);
        for (const auto& t : result->report.timings) result->names.emplace_back(janus::to_string(t.engine));
        *out = result.release();
    });
}

void janus_bench_destroy(janus_bench_result* result) { delete result; }

size_t janus_bench_count(const janus_bench_result* result) { return result ? result->names.size() : 0; }

const char* janus_bench_engine(const janus_bench_result* result, size_t index) {
    return result && index < result->names.size() ? result->names[index].c_str() : nullptr;
}

double janus_bench_median_ns(const janus_bench_result* result, size_t index) {
    return result && index < result->names.size() ? result->report.timings[index].median_ns : 0.0;
}

double janus_bench_ratio(const janus_bench_result* result, size_t row, size_t column) {
    if (!result || row >= result->names.size() || column >= result->names.size()) return 0.0;
    return result->report.ratio(row, column);
}

janus_status janus_bench_table(const janus_bench_result* result, char** out) {
    if (!result || !out) return fail(JANUS_ERR_INVALID_ARGUMENT, "null result or output pointer");
    return guarded([&] {
        std::ostringstream text;
        janus::write_bench_table(text, result->report);
        *out = copy_string(text.str());
    });
}

janus_status janus_bench_csv(const janus_bench_result* result, char** out) {
    if (!result || !out) return fail(JANUS_ERR_INVALID_ARGUMENT, "null result or output pointer");
    return guarded([&] {
        std::ostringstream text;
        janus::write_bench_csv(text, result->report);
        *out = copy_string(text.str());
    });
}

janus_status janus_color(const janus_color_params* params, janus_color_result* result) {
    if (!params || !result) return fail(JANUS_ERR_INVALID_ARGUMENT, "null params or result");
    return guarded([&] {
        if (params->colors < 1 || params->colors > 255) throw janus::DomainError("colors must lie in [1, 255]");
        janus::Graph graph;
        if (params->graph_path) {
            std::ifstream in(params->graph_path);
            if (!in) throw janus::IoError(std::string("cannot open graph '") + params->graph_path + "'");
            graph = janus::read_edge_list(in, params->vertices);
        } else {
            graph = janus::planted_graph(params->vertices, params->colors, params->connectivity, params->seed).graph;
        }
        if (params->graph_out) {
            std::ostringstream text;
            janus::write_edge_list(text, graph);
            write_file(params->graph_out, text.str());
        }
        const auto schedule =
            janus::linear_schedule(params->beta_start, params->beta_end, params->steps, params->sweeps_per_step);
        const auto initial = janus::random_coloring(graph.vertex_count(), params->colors,
                                                    janus::prng::stream_seed(params->seed, 1));
        const std::uint64_t initial_energy = janus::coloring_energy(graph, initial);
        const janus::AnnealResult r =
            janus::anneal(graph, params->colors, schedule, initial, janus::prng::stream_seed(params->seed, 2));
        if (params->solution_out) {
            std::ostringstream text;
            for (std::size_t v = 0; v < r.best_colors.size(); ++v) text << v << ' ' << int(r.best_colors[v]) << '\n';
            write_file(params->solution_out, text.str());
        }
        *result = {};
        result->vertices = graph.vertex_count();
        result->edges = graph.edge_count();
        result->subsets = janus::partition_independent_sets(graph).size();
        result->initial_energy = initial_energy;
        result->best_energy = r.best_energy;
        result->sweeps_run = r.sweeps_run;
        result->success = r.success ? 1 : 0;
    });
}

janus_status janus_verify(const char* fault, janus_verify_callback callback, void* user, int* all_passed) {
    janus::VerifyFault f = janus::VerifyFault::None;
    if (fault && *fault) {
        if (std::strcmp(fault, "hb-table") != 0)
            return fail(JANUS_ERR_INVALID_ARGUMENT, std::string("unknown fault '") + fault + "' (hb-table)");
        f = janus::VerifyFault::HeatBathTable;
    }
    return guarded([&] {
        const janus::VerifyReport report = janus::run_verify(f, [&](const janus::VerifyCheck& c) {
            if (callback) callback(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), c.seconds, user);
        });
        if (all_passed) *all_passed = report.passed() ? 1 : 0;
    });
}

janus_status janus_prng_create(uint64_t seed, janus_prng** out) {
    if (!out) return fail(JANUS_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = new janus_prng{janus::prng::seed_wheel(seed)}; });
}

void janus_prng_destroy(janus_prng* prng) { delete prng; }

uint32_t janus_prng_next(janus_prng* prng) { return prng ? prng->wheel.next() : 0; }

uint64_t janus_stream_seed(uint64_t seed, uint64_t index) { return janus::prng::stream_seed(seed, index); }

}  // extern "C"
