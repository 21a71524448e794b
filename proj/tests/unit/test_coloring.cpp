#include <set>
#include <sstream>

#include "coloring/coloring.hpp"
#include "doctest.h"

using namespace janus;

TEST_CASE("triangle with one color has three violated edges") {
    const Edge e[] = {{0, 1}, {1, 2}, {2, 0}};
    const Graph g(3, e);
    const std::vector<std::uint8_t> mono(3, 0);
    CHECK(coloring_energy(g, mono) == 3);
    CHECK(coloring_delta(g, mono, 0, 1) == -2);
    const std::vector<std::uint8_t> proper{0, 1, 2};
    CHECK(coloring_energy(g, proper) == 0);
    CHECK(coloring_delta(g, proper, 0, 1) == 1);
}

TEST_CASE("graph construction") {
    const Edge e[] = {{0, 1}, {1, 0}, {2, 1}, {0, 1}};
    const Graph g(4, e);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.max_degree() == 2);
    CHECK(g.mean_connectivity() == doctest::Approx(1.0));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph(2, loop), DomainError);
    const Edge out[] = {{0, 5}};
    CHECK_THROWS_AS(Graph(2, out), DomainError);
}

TEST_CASE("edge list round trip and parse errors") {
    const Graph g = random_graph(50, 3.0, 4);
    std::stringstream text;
    write_edge_list(text, g);
    CHECK(read_edge_list(text, 50) == g);

    std::stringstream commented("# header\n0 1\n\n1 2 # trailing\n");
    const Graph c = read_edge_list(commented, 5);
    CHECK(c.vertex_count() == 5);
    CHECK(c.edge_count() == 2);

    for (const char* bad : {"0 1\n2\n", "0 1\n1 x\n", "0 1\n3 3\n", "0 1\n1 2 3\n", "0 -1\n"}) {
        CAPTURE(bad);
        std::stringstream in(bad);
        try {
            read_edge_list(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() >= 1);
        }
    }
    std::stringstream second_line("0 1\n2\n");
    try {
        read_edge_list(second_line);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("random graphs have the requested edge count") {
    const Graph g = random_graph(1000, 4.0, 11);
    CHECK(g.vertex_count() == 1000);
    CHECK(g.edge_count() == 2000);
    CHECK(g == random_graph(1000, 4.0, 11));
    CHECK_FALSE(g == random_graph(1000, 4.0, 12));
    CHECK_THROWS_AS(random_graph(4, 10.0, 1), DomainError);
}

TEST_CASE("planted graphs are properly colored by their hidden coloring") {
    const PlantedGraph p = planted_graph(3000, 3, 4.0, 9);
    CHECK(p.graph.edge_count() == 6000);
    CHECK(coloring_energy(p.graph, p.hidden_coloring) == 0);
    std::array<int, 3> sizes{};
    for (auto c : p.hidden_coloring) ++sizes.at(c);
    for (int s : sizes) CHECK(s == 1000);
    CHECK_THROWS_AS(planted_graph(2, 3, 1.0, 1), DomainError);
}

TEST_CASE("independent-set partitions are valid on random graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = random_graph(200 + seed, 2.0 + 0.1 * seed, seed);
        const IndependentPartition p = partition_independent_sets(g);
        CHECK(is_valid_partition(g, p));
        CHECK(p.size() <= g.max_degree() + 1);
    }
    const Edge e[] = {{0, 1}};
    const Graph g(3, e);
    IndependentPartition broken;
    broken.subsets = {{0, 1}, {2}};
    CHECK_FALSE(is_valid_partition(g, broken));
    broken.subsets = {{0}, {1}};
    CHECK_FALSE(is_valid_partition(g, broken));
    broken.subsets = {{0, 2}, {1}, {2}};
    CHECK_FALSE(is_valid_partition(g, broken));
}

TEST_CASE("color and topology stores stay consistent") {
    const Graph g = random_graph(300, 4.0, 2);
    ColoringState state(g, partition_independent_sets(g), 3, random_coloring(300, 3, 5));
    CHECK(state.consistent());
    for (std::size_t v = 0; v < 300; ++v) {
        const auto slot = state.slot(v);
        CHECK(state.vertex_at(slot) == v);
        CHECK(state.color_store()[slot] == state.color(v));
        std::set<std::uint32_t> tm(state.topology(slot).begin(), state.topology(slot).end());
        std::set<std::uint32_t> want;
        for (auto u : g.neighbors(v)) want.insert(state.slot(u));
        CHECK(tm == want);
    }
    prng::StreamSet streams = prng::fork_streams(3, 300);
    std::uint64_t e = coloring_energy(g, state.flat_colors());
    for (int s = 0; s < 20; ++s) {
        const std::int64_t d = coloring_sweep(state, Beta(2.0), streams);
        const std::uint64_t now = coloring_energy(g, state.flat_colors());
        CHECK(static_cast<std::int64_t>(now) - static_cast<std::int64_t>(e) == d);
        e = now;
        CHECK(state.consistent());
    }
    CHECK(streams.total_draws() == 20u * 2 * 300);
    state.set_color(0, 2);
    CHECK(state.color(0) == 2);
    CHECK(state.consistent());
    CHECK_THROWS_AS(state.set_color(0, 3), DomainError);
    CHECK_THROWS_AS(ColoringState(g, partition_independent_sets(g), 3, std::vector<std::uint8_t>(300, 3)),
                    DomainError);
}

TEST_CASE("single color: draws happen, nothing moves") {
    const Graph g = random_graph(20, 2.0, 1);
    ColoringState state(g, partition_independent_sets(g), 1, std::vector<std::uint8_t>(20, 0));
    prng::StreamSet streams = prng::fork_streams(3, 20);
    CHECK(coloring_sweep(state, Beta(1.0), streams) == 0);
    CHECK(streams.total_draws() == 40);
}

TEST_CASE("zero temperature sweeps never raise the energy") {
    const Graph g = random_graph(500, 4.0, 6);
    ColoringState state(g, partition_independent_sets(g), 4, random_coloring(500, 4, 1));
    prng::StreamSet streams = prng::fork_streams(3, 500);
    for (int s = 0; s < 30; ++s) CHECK(coloring_sweep(state, Beta::infinite(), streams) <= 0);
}

TEST_CASE("annealing is deterministic and stops at zero energy") {
    const PlantedGraph p = planted_graph(200, 3, 2.0, 4);
    const auto schedule = linear_schedule(1.0, 6.0, 20, 50);
    CHECK(schedule.size() == 20);
    CHECK(schedule.front().beta.value() == 1.0);
    CHECK(schedule.back().beta.value() == 6.0);
    const AnnealResult a = anneal(p.graph, 3, schedule, random_coloring(200, 3, 1), 2);
    const AnnealResult b = anneal(p.graph, 3, schedule, random_coloring(200, 3, 1), 2);
    CHECK(a.best_colors == b.best_colors);
    CHECK(a.energy_trace == b.energy_trace);
    CHECK(a.success);
    CHECK(a.best_energy == 0);
    CHECK(coloring_energy(p.graph, a.best_colors) == 0);
    CHECK(a.sweeps_run < 1000);
    CHECK(a.energy_trace.size() == a.sweeps_run + 1);
    CHECK(a.energy_trace.back() == 0);

    CHECK_THROWS_AS(anneal(p.graph, 3, std::vector<AnnealStep>{}, random_coloring(200, 3, 1), 2), DomainError);
    CHECK_THROWS_AS(linear_schedule(1, 2, 0, 1), DomainError);
}

TEST_CASE("an uncolorable graph never reports success") {
    const Edge k4[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const Graph g(4, k4);
    const auto schedule = linear_schedule(0.5, 5.0, 10, 20);
    const AnnealResult r = anneal(g, 3, schedule, random_coloring(4, 3, 1), 5);
    CHECK_FALSE(r.success);
    CHECK(r.best_energy == 1);
    CHECK(r.sweeps_run == 200);
}
