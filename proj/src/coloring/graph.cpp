#include "coloring/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "common/error.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) {
    if (vertex_count > std::size_t{0xFFFFFFFFu}) throw DomainError("graph: too many vertices");
    std::vector<Edge> unique;
    unique.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw DomainError("graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") names a vertex >= " + std::to_string(vertex_count));
        if (u == v) throw DomainError("graph: self-loop at vertex " + std::to_string(u));
        unique.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    std::vector<std::size_t> degree(vertex_count, 0);
    for (auto [u, v] : unique) {
        ++degree[u];
        ++degree[v];
    }
    offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : unique) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < vertex_count; ++v)
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
    return best;
}

double Graph::mean_connectivity() const noexcept {
    return vertex_count() == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count()) / static_cast<double>(vertex_count());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < vertex_count(); ++u)
        for (std::uint32_t v : neighbors(u))
            if (u < v) out.emplace_back(static_cast<std::uint32_t>(u), v);
    return out;
}

Graph read_edge_list(std::istream& in, std::size_t min_vertices) {
    std::vector<Edge> edges;
    std::size_t vertices = min_vertices;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;
        if (!(fields >> b)) throw ParseError("expected two vertex indices", number);
        if (fields >> extra) throw ParseError("unexpected trailing text '" + extra + "'", number);
        const auto parse = [&](const std::string& text) -> std::uint32_t {
            if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError("vertex index '" + text + "' is not a non-negative integer", number);
            const unsigned long long value = std::stoull(text);
            if (value >= 0xFFFFFFFFull) throw ParseError("vertex index '" + text + "' is too large", number);
            return static_cast<std::uint32_t>(value);
        };
        const std::uint32_t u = parse(a);
        const std::uint32_t v = parse(b);
        if (u == v) throw ParseError("self-loop at vertex " + a, number);
        edges.emplace_back(u, v);
        vertices = std::max<std::size_t>(vertices, std::max(u, v) + std::size_t{1});
    }
    if (in.bad()) throw IoError("failed while reading edge list");
    return Graph(vertices, edges);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
    out << "# vertices " << graph.vertex_count() << " edges " << graph.edge_count() << '\n';
    for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

namespace {

std::uint64_t edge_key(std::uint32_t u, std::uint32_t v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::size_t target_edges(std::size_t n, double mean_connectivity) {
    if (!(mean_connectivity >= 0.0) || !std::isfinite(mean_connectivity))
        throw DomainError("mean connectivity must be finite and non-negative");
    return static_cast<std::size_t>(std::llround(static_cast<double>(n) * mean_connectivity / 2.0));
}

}  // namespace

Graph random_graph(std::size_t vertex_count, double mean_connectivity, std::uint64_t seed) {
    const std::size_t m = target_edges(vertex_count, mean_connectivity);
    const double possible = 0.5 * static_cast<double>(vertex_count) * (static_cast<double>(vertex_count) - 1.0);
    if (static_cast<double>(m) > possible)
        throw DomainError("mean connectivity " + std::to_string(mean_connectivity) + " exceeds a complete graph");
    std::uint64_t state = prng::stream_seed(seed, 0);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        const auto u = static_cast<std::uint32_t>(prng::bounded(state, vertex_count));
        const auto v = static_cast<std::uint32_t>(prng::bounded(state, vertex_count));
        if (u == v || !seen.insert(edge_key(u, v)).second) continue;
        edges.emplace_back(u, v);
    }
    return Graph(vertex_count, edges);
}

PlantedGraph planted_graph(std::size_t vertex_count, int colors, double mean_connectivity, std::uint64_t seed) {
    if (colors < 2 || colors > 255) throw DomainError("planted graph needs 2 <= Q <= 255 colors");
    if (vertex_count < static_cast<std::size_t>(colors)) throw DomainError("planted graph needs N >= Q");
    const std::size_t m = target_edges(vertex_count, mean_connectivity);

    std::vector<std::uint8_t> hidden(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) hidden[v] = static_cast<std::uint8_t>(v % colors);
    std::uint64_t state = prng::stream_seed(seed, 1);
    for (std::size_t i = vertex_count - 1; i > 0; --i)
        std::swap(hidden[i], hidden[prng::bounded(state, i + 1)]);

    // Balanced classes give N^2 (Q-1) / (2Q) admissible pairs.
    const double possible = static_cast<double>(vertex_count) * static_cast<double>(vertex_count) *
                            (colors - 1) / (2.0 * colors) * 0.9;
    if (static_cast<double>(m) > possible)
        throw DomainError("mean connectivity too high for a planted " + std::to_string(colors) + "-colorable graph");

    state = prng::stream_seed(seed, 0);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        const auto u = static_cast<std::uint32_t>(prng::bounded(state, vertex_count));
        const auto v = static_cast<std::uint32_t>(prng::bounded(state, vertex_count));
        if (hidden[u] == hidden[v] || !seen.insert(edge_key(u, v)).second) continue;
        edges.emplace_back(u, v);
    }
    return {Graph(vertex_count, edges), std::move(hidden)};
}

}  // namespace janus
