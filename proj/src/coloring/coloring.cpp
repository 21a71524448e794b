#include "coloring/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "common/error.hpp"
#include "engines/tables.hpp"

namespace janus {

IndependentPartition partition_independent_sets(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return graph.degree(a) > graph.degree(b); });

    constexpr std::uint32_t kUnassigned = ~0u;
    std::vector<std::uint32_t> subset_of(n, kUnassigned);
    std::vector<std::size_t> used_by(graph.max_degree() + 2, static_cast<std::size_t>(-1));
    IndependentPartition partition;
    for (std::uint32_t v : order) {
        for (std::uint32_t u : graph.neighbors(v))
            if (subset_of[u] != kUnassigned) used_by[subset_of[u]] = v;
        std::uint32_t k = 0;
        while (used_by[k] == v) ++k;
        subset_of[v] = k;
        if (k >= partition.subsets.size()) partition.subsets.resize(k + 1);
        partition.subsets[k].push_back(v);
    }
    for (auto& subset : partition.subsets) std::sort(subset.begin(), subset.end());
    return partition;
}

bool is_valid_partition(const Graph& graph, const IndependentPartition& partition) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::size_t> subset_of(n, static_cast<std::size_t>(-1));
    std::size_t covered = 0;
    for (std::size_t k = 0; k < partition.size(); ++k)
        for (std::uint32_t v : partition.subsets[k]) {
            if (v >= n || subset_of[v] != static_cast<std::size_t>(-1)) return false;
            subset_of[v] = k;
            ++covered;
        }
    if (covered != n) return false;
    for (auto [u, v] : graph.edges())
        if (subset_of[u] == subset_of[v]) return false;
    return true;
}

ColoringState::ColoringState(const Graph& graph, IndependentPartition partition, int colors,
                             std::vector<std::uint8_t> initial)
    : colors_(colors), partition_(std::move(partition)), flat_(std::move(initial)) {
    if (colors < 1 || colors > 255) throw DomainError("color count must lie in [1, 255], got " + std::to_string(colors));
    if (flat_.size() != graph.vertex_count()) throw DomainError("initial coloring has the wrong length");
    for (std::uint8_t c : flat_)
        if (c >= colors) throw DomainError("initial color " + std::to_string(c) + " is not below Q");
    if (!is_valid_partition(graph, partition_)) throw DomainError("partition is not a set of independent subsets");

    const std::size_t n = flat_.size();
    slot_of_.resize(n);
    vertex_at_.reserve(n);
    subset_offsets_.push_back(0);
    for (const auto& subset : partition_.subsets) {
        for (std::uint32_t v : subset) {
            slot_of_[v] = static_cast<std::uint32_t>(vertex_at_.size());
            vertex_at_.push_back(v);
        }
        subset_offsets_.push_back(vertex_at_.size());
    }
    cm_.resize(n);
    tm_offsets_.push_back(0);
    for (std::size_t s = 0; s < n; ++s) {
        const std::uint32_t v = vertex_at_[s];
        cm_[s] = flat_[v];
        for (std::uint32_t u : graph.neighbors(v)) tm_.push_back(slot_of_[u]);
        tm_offsets_.push_back(tm_.size());
    }
}

void ColoringState::set_color(std::size_t vertex, int color) {
    if (vertex >= flat_.size()) throw DomainError("vertex index out of range");
    if (color < 0 || color >= colors_) throw DomainError("color " + std::to_string(color) + " is not below Q");
    flat_[vertex] = static_cast<std::uint8_t>(color);
    cm_[slot_of_[vertex]] = static_cast<std::uint8_t>(color);
}

bool ColoringState::consistent() const noexcept {
    for (std::size_t s = 0; s < cm_.size(); ++s)
        if (cm_[s] != flat_[vertex_at_[s]]) return false;
    return true;
}

std::uint64_t coloring_energy(const Graph& graph, std::span<const std::uint8_t> colors) {
    if (colors.size() != graph.vertex_count()) throw DomainError("coloring has the wrong length");
    std::uint64_t e = 0;
    for (std::size_t u = 0; u < graph.vertex_count(); ++u)
        for (std::uint32_t v : graph.neighbors(u))
            if (u < v && colors[u] == colors[v]) ++e;
    return e;
}

int coloring_delta(const Graph& graph, std::span<const std::uint8_t> colors, std::size_t vertex, int new_color) {
    int delta = 0;
    const int current = colors[vertex];
    for (std::uint32_t u : graph.neighbors(vertex)) delta += (colors[u] == new_color) - (colors[u] == current);
    return delta;
}

std::vector<std::uint8_t> random_coloring(std::size_t vertex_count, int colors, std::uint64_t seed) {
    if (colors < 1 || colors > 255) throw DomainError("color count must lie in [1, 255]");
    std::vector<std::uint8_t> out(vertex_count);
    std::uint64_t state = seed;
    for (auto& c : out) c = static_cast<std::uint8_t>(prng::bounded(state, static_cast<std::uint64_t>(colors)));
    return out;
}

std::int64_t coloring_sweep(ColoringState& state, Beta beta, prng::StreamSet& streams, SweepOrder order) {
    const std::size_t n = state.vertex_count();
    if (streams.size() < n) throw DomainError("coloring sweep needs one random stream per vertex");

    std::size_t max_degree = 0;
    for (std::size_t s = 0; s < n; ++s) max_degree = std::max(max_degree, state.topology(s).size());
    std::vector<std::uint64_t> thresholds(max_degree + 1);
    for (std::size_t d = 0; d <= max_degree; ++d) thresholds[d] = metropolis_threshold(beta, static_cast<long double>(d));

    const int q = state.colors_;
    auto& cm = state.cm_;
    std::int64_t total = 0;
    const auto update = [&](std::size_t slot) {
        const std::uint32_t v = state.vertex_at_[slot];
        auto& wheel = streams[v];
        const std::uint32_t proposal_word = wheel.next();
        const std::uint32_t accept_word = wheel.next();
        if (q == 1) return;
        const int current = cm[slot];
        const int r = static_cast<int>(proposal_word % static_cast<std::uint32_t>(q - 1));
        const int proposed = r < current ? r : r + 1;
        int delta = 0;
        for (std::uint32_t nb : state.topology(slot)) delta += (cm[nb] == proposed) - (cm[nb] == current);
        const std::uint64_t threshold = delta <= 0 ? kProbabilityOne : thresholds[static_cast<std::size_t>(delta)];
        if (accept_word < threshold) {
            cm[slot] = static_cast<std::uint8_t>(proposed);
            state.flat_[v] = static_cast<std::uint8_t>(proposed);
            total += delta;
        }
    };

    for (std::size_t k = 0; k < state.partition_.size(); ++k) {
        const auto [begin, end] = state.subset_range(k);
        if (order.reverse_within_subsets) {
            for (std::size_t s = end; s-- > begin;) update(s);
        } else {
            for (std::size_t s = begin; s < end; ++s) update(s);
        }
    }
    return total;
}

AnnealResult anneal(const Graph& graph, int colors, std::span<const AnnealStep> schedule,
                    std::vector<std::uint8_t> initial, std::uint64_t dynamics_seed) {
    if (schedule.empty()) throw DomainError("anneal needs a non-empty schedule");
    ColoringState state(graph, partition_independent_sets(graph), colors, std::move(initial));
    prng::StreamSet streams = prng::fork_streams(dynamics_seed, std::max<std::size_t>(graph.vertex_count(), 1));

    AnnealResult result;
    auto energy = static_cast<std::int64_t>(coloring_energy(graph, state.flat_colors()));
    result.best_energy = static_cast<std::uint64_t>(energy);
    result.best_colors.assign(state.flat_colors().begin(), state.flat_colors().end());
    result.energy_trace.push_back(result.best_energy);

    for (const AnnealStep& step : schedule) {
        for (std::uint64_t i = 0; i < step.sweeps && energy > 0; ++i) {
            energy += coloring_sweep(state, step.beta, streams);
            ++result.sweeps_run;
            result.energy_trace.push_back(static_cast<std::uint64_t>(energy));
            if (static_cast<std::uint64_t>(energy) < result.best_energy) {
                result.best_energy = static_cast<std::uint64_t>(energy);
                result.best_colors.assign(state.flat_colors().begin(), state.flat_colors().end());
            }
        }
        if (energy == 0) break;
    }
    result.success = result.best_energy == 0;
    return result;
}

std::vector<AnnealStep> linear_schedule(double beta_start, double beta_end, std::size_t steps,
                                        std::uint64_t sweeps_per_step) {
    if (steps == 0) throw DomainError("schedule needs at least one step");
    std::vector<AnnealStep> out;
    out.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
        out.push_back({Beta(beta_start + t * (beta_end - beta_start)), sweeps_per_step});
    }
    return out;
}

}  // namespace janus
