#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace janus {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    /// Throws DomainError on self-loops or endpoints >= vertex_count.
    /// Repeated edges are merged.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    std::span<const std::uint32_t> neighbors(std::size_t v) const noexcept {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(std::size_t v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const noexcept;

    /// C_m = 2 |E| / N.
    double mean_connectivity() const noexcept;

    /// Each edge once, as (u, v) with u < v, in increasing order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> adjacency_;
};

/// `u v` per line, 0-indexed, `#` starts a comment. The vertex count is one
/// more than the largest index seen, or `min_vertices` if larger. Throws
/// ParseError with the line number on malformed lines.
Graph read_edge_list(std::istream& in, std::size_t min_vertices = 0);
void write_edge_list(std::ostream& out, const Graph& graph);

/// G(N, M) with M = round(N * C_m / 2) distinct edges, uniformly chosen.
Graph random_graph(std::size_t vertex_count, double mean_connectivity, std::uint64_t seed);

struct PlantedGraph {
    Graph graph;
    std::vector<std::uint8_t> hidden_coloring;
};

/// Random graph built around a hidden balanced Q-coloring: vertices get
/// colors v mod Q in shuffled order and M = round(N C_m / 2) distinct edges
/// are drawn uniformly among pairs of differently colored vertices, so the
/// hidden coloring is proper by construction.
PlantedGraph planted_graph(std::size_t vertex_count, int colors, double mean_connectivity, std::uint64_t seed);

}  // namespace janus
