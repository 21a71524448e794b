#pragma once

// Graph coloring as an antiferromagnetic Potts model, E = number of
// monochromatic edges. Vertices are first split into independent subsets;
// every vertex of one subset can then be updated at once.

#include <cstdint>
#include <span>
#include <vector>

#include "coloring/graph.hpp"
#include "common/beta.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

struct IndependentPartition {
    std::vector<std::vector<std::uint32_t>> subsets;

    std::size_t size() const noexcept { return subsets.size(); }
};

/// Greedy largest-first: vertices in decreasing degree (ties by index) take
/// the lowest subset index not used by an already placed neighbor. At most
/// max_degree + 1 subsets.
IndependentPartition partition_independent_sets(const Graph& graph);

/// Subsets cover every vertex exactly once and contain no edge.
bool is_valid_partition(const Graph& graph, const IndependentPartition& partition);

struct SweepOrder {
    bool reverse_within_subsets = false;
};

/// Color memory and topology memory. The color store (CM) keeps the colors
/// ordered subset by subset; the topology store (TM) keeps, for each CM
/// slot, the CM addresses of the vertex's neighbors. A flat per-vertex color
/// vector is mirrored on every write.
class ColoringState {
public:
    /// Throws DomainError unless 1 <= Q <= 255, the partition is valid and
    /// every color is below Q.
    ColoringState(const Graph& graph, IndependentPartition partition, int colors, std::vector<std::uint8_t> initial);

    int colors() const noexcept { return colors_; }
    std::size_t vertex_count() const noexcept { return flat_.size(); }
    const IndependentPartition& partition() const noexcept { return partition_; }

    std::span<const std::uint8_t> flat_colors() const noexcept { return flat_; }
    std::uint8_t color(std::size_t vertex) const noexcept { return flat_[vertex]; }

    std::span<const std::uint8_t> color_store() const noexcept { return cm_; }
    /// CM slot of a vertex.
    std::uint32_t slot(std::size_t vertex) const noexcept { return slot_of_[vertex]; }
    /// Vertex stored at a CM slot.
    std::uint32_t vertex_at(std::size_t slot) const noexcept { return vertex_at_[slot]; }
    /// CM range [begin, end) of subset `k`.
    std::pair<std::size_t, std::size_t> subset_range(std::size_t k) const noexcept {
        return {subset_offsets_[k], subset_offsets_[k + 1]};
    }
    /// TM row of a CM slot: neighbor CM addresses.
    std::span<const std::uint32_t> topology(std::size_t slot) const noexcept {
        return {tm_.data() + tm_offsets_[slot], tm_offsets_[slot + 1] - tm_offsets_[slot]};
    }

    void set_color(std::size_t vertex, int color);

    /// Color store and flat colors agree.
    bool consistent() const noexcept;

private:
    friend std::int64_t coloring_sweep(ColoringState&, Beta, prng::StreamSet&, SweepOrder);

    int colors_;
    IndependentPartition partition_;
    std::vector<std::uint8_t> flat_;
    std::vector<std::uint8_t> cm_;
    std::vector<std::uint32_t> tm_;
    std::vector<std::size_t> tm_offsets_;
    std::vector<std::size_t> subset_offsets_;
    std::vector<std::uint32_t> slot_of_;
    std::vector<std::uint32_t> vertex_at_;
};

/// Number of edges whose endpoints share a color.
std::uint64_t coloring_energy(const Graph& graph, std::span<const std::uint8_t> colors);

/// Change of coloring_energy if `vertex` took `new_color`.
int coloring_delta(const Graph& graph, std::span<const std::uint8_t> colors, std::size_t vertex, int new_color);

/// Uniform random colors from a SplitMix64 stream.
std::vector<std::uint8_t> random_coloring(std::size_t vertex_count, int colors, std::uint64_t seed);

/// Metropolis sweep, subset by subset. Vertex v draws two words from
/// streams[v]: a proposal (r = word mod (Q-1), new color r, or r+1 when
/// r >= current) and an acceptance word compared against
/// round(2^32 exp(-beta dE)). With Q = 1 both words are drawn and nothing
/// changes. Returns the energy change of the sweep.
std::int64_t coloring_sweep(ColoringState& state, Beta beta, prng::StreamSet& streams, SweepOrder order = {});

struct AnnealStep {
    Beta beta;
    std::uint64_t sweeps = 0;
};

struct AnnealResult {
    std::vector<std::uint8_t> best_colors;
    std::uint64_t best_energy = 0;
    std::uint64_t sweeps_run = 0;
    bool success = false;          ///< a zero-energy coloring was reached
    std::vector<std::uint64_t> energy_trace;  ///< initial energy, then one entry per sweep
};

/// Runs the schedule, stopping as soon as the energy hits 0. Dynamics draw
/// from fork_streams(dynamics_seed, N). Throws DomainError on an empty
/// schedule.
AnnealResult anneal(const Graph& graph, int colors, std::span<const AnnealStep> schedule,
                    std::vector<std::uint8_t> initial, std::uint64_t dynamics_seed);

/// Linear ramp in beta from `beta_start` to `beta_end` in `steps` steps of
/// `sweeps_per_step` sweeps each.
std::vector<AnnealStep> linear_schedule(double beta_start, double beta_end, std::size_t steps,
                                        std::uint64_t sweeps_per_step);

}  // namespace janus
