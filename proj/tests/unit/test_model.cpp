#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "model/energy.hpp"
#include "model/model.hpp"
#include "prng/parisi_rapuano.hpp"
#include "support.hpp"

using namespace janus;

TEST_CASE("neighbor indices") {
    const LatticeGeometry g4(4);
    const auto nb = g4.neighbor_indices(g4.index({0, 0, 0}));
    CHECK(nb[1] == g4.index({3, 0, 0}));
    CHECK(nb[0] == g4.index({1, 0, 0}));
    CHECK(nb[3] == g4.index({0, 3, 0}));
    CHECK(nb[5] == g4.index({0, 0, 3}));

    const LatticeGeometry g2(2);
    const auto nb2 = g2.neighbor_indices(0);
    CHECK(nb2[0] == g2.index({1, 0, 0}));
    CHECK(nb2[1] == g2.index({1, 0, 0}));

    const LatticeGeometry g3(3);
    const auto c = g3.neighbor_indices(g3.index({1, 1, 1}));
    const std::set<std::size_t> got(c.begin(), c.end());
    const std::set<std::size_t> want{g3.index({2, 1, 1}), g3.index({0, 1, 1}), g3.index({1, 2, 1}),
                                     g3.index({1, 0, 1}), g3.index({1, 1, 2}), g3.index({1, 1, 0})};
    CHECK(got == want);

    CHECK_THROWS_AS(g3.neighbor_indices(27), DomainError);
    CHECK_THROWS_AS(LatticeGeometry(1), DomainError);
}

TEST_CASE("neighbor relation is symmetric with six slots") {
    for (int l : {2, 3, 5}) {
        const LatticeGeometry g(l);
        for (std::size_t i = 0; i < g.site_count(); ++i) {
            const auto nb = g.neighbor_indices(i);
            for (int s = 0; s < kNeighborSlots; ++s) {
                const auto back = g.neighbor_indices(nb[s]);
                CHECK(back[s ^ 1] == i);
                CHECK(g.slot_bond(i, s) == g.slot_bond(nb[s], s ^ 1));
            }
        }
    }
}

TEST_CASE("spin configuration domain checks") {
    SpinConfig ising(LatticeGeometry(2), SpinDomain::Ising, 2);
    CHECK(ising[0] == 1);
    CHECK_THROWS_AS(ising.set(0, 0), DomainError);
    ising.set(0, -1);
    CHECK(ising.digit(0) == 0);
    SpinConfig potts(LatticeGeometry(2), SpinDomain::Potts, 4);
    CHECK_THROWS_AS(potts.set(0, 4), DomainError);
    CHECK_THROWS_AS(SpinConfig(LatticeGeometry(2), SpinDomain::Ising, 3), DomainError);
    CHECK_THROWS_AS(SpinConfig(LatticeGeometry(2), SpinDomain::Potts, 1), DomainError);
}

TEST_CASE("aligned ferromagnet energies") {
    CouplingParams ferro;
    ferro.ferromagnetic = true;
    const ModelSpec m = make_model(ModelKind::IsingEA, 2, Beta(1.0), 0, ferro);
    const SpinConfig up = m.blank_config();
    CHECK(total_energy(m, up) == -24.0);
    CHECK(local_energy(m, up, 0) == -6.0);
    CHECK(local_energy_delta(m, up, 0, -1) == 12.0);
    CHECK(local_energy_delta(m, up, 0, 1) == 0.0);
    CHECK_THROWS_AS(local_energy_delta(m, up, 0, 0), DomainError);
}

TEST_CASE("field term") {
    CouplingParams p;
    p.ferromagnetic = true;
    p.field = 1.0;
    const ModelSpec m = make_model(ModelKind::IsingEA, 4, Beta(1.0), 0, p);
    SpinConfig c = m.blank_config();
    const auto nb = m.geometry().neighbor_indices(0);
    c.set(nb[0], -1);
    c.set(nb[2], -1);
    c.set(nb[4], -1);
    CHECK(local_energy(m, c, 0) == -1.0);
    CHECK(local_energy_delta(m, c, 0, -1) == 2.0);
    // E = bonds - h * sum s
    CouplingParams p0 = p;
    p0.field = 0.0;
    const ModelSpec m0 = make_model(ModelKind::IsingEA, 4, Beta(1.0), 0, p0);
    double sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) sum += c[i];
    CHECK(total_energy(m, c) == doctest::Approx(total_energy(m0, c) - sum));
}

TEST_CASE("potts local energy counts equal neighbors") {
    CouplingParams p;
    p.q = 4;
    p.ferromagnetic = true;
    const ModelSpec m = make_model(ModelKind::Potts, 4, Beta(1.0), 0, p);
    SpinConfig c = m.blank_config();
    const auto nb = m.geometry().neighbor_indices(0);
    for (int s = 2; s < 6; ++s) c.set(nb[s], 1 + s % 3);
    CHECK(local_energy(m, c, 0) == -2.0);
}

TEST_CASE("model kind names") {
    CHECK(parse_model_kind("graph-coloring") == ModelKind::GraphColoring);
    CHECK(parse_model_kind("ising") == ModelKind::IsingEA);
    CHECK_FALSE(parse_model_kind("xy").has_value());
}

TEST_CASE("bond-sum oracle energies for every lattice model") {
    for (const char* tag : {"ea-L3-s5", "potts-L3-q3-s6", "glassy-L3-q4-s7", "chiral-L3-q5-s8"}) {
        CAPTURE(tag);
        const ModelSpec m = test::load_model(tag, Beta(1.0));
        const SpinConfig c = test::load_snapshot(std::string(tag) + ".snap");
        CHECK(total_energy(m, c) == test::oracle_value(tag, "-", "energy"));
    }
}

TEST_CASE("delta consistency on random instances") {
    const std::pair<ModelKind, int> kinds[] = {{ModelKind::IsingEA, 2},
                                               {ModelKind::Potts, 3},
                                               {ModelKind::GlassyPotts, 4},
                                               {ModelKind::ChiralPotts, 5}};
    for (auto [kind, q] : kinds) {
        CouplingParams p;
        p.q = q;
        p.occupation = 0.8;
        if (kind == ModelKind::IsingEA) p.field = 0.75;
        const ModelSpec m = make_model(kind, 3, Beta(1.0), 42, p);
        SpinConfig c = random_config(m.geometry(), m.domain(), q, 43);
        std::uint64_t st = 44;
        for (int t = 0; t < 300; ++t) {
            const std::size_t site = prng::bounded(st, c.size());
            int v = m.domain() == SpinDomain::Ising ? (prng::bounded(st, 2) ? 1 : -1)
                                                    : static_cast<int>(prng::bounded(st, q));
            const double before = total_energy(m, c);
            const double d = local_energy_delta(m, c, site, v);
            const double predicted = local_energy(m, c, site);
            SpinConfig after = c;
            after.set(site, v);
            CHECK(total_energy(m, after) - before == doctest::Approx(d).epsilon(1e-12));
            CHECK(local_energy(m, after, site) - predicted == doctest::Approx(d).epsilon(1e-12));
            c = after;
        }
    }
}

TEST_CASE("energy bounds and flip symmetry") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 4, Beta(1.0), 9);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const SpinConfig c = random_config(m.geometry(), SpinDomain::Ising, 2, s);
        const double e = total_energy(m, c);
        CHECK(e >= -3.0 * 64);
        CHECK(e <= 3.0 * 64);
        CHECK(total_energy(m, flipped(c)) == e);
    }
}

TEST_CASE("coupling generation") {
    const LatticeGeometry g(4);
    CHECK(generate_couplings(ModelKind::IsingEA, g, 3, {}) == generate_couplings(ModelKind::IsingEA, g, 3, {}));
    CHECK_FALSE(generate_couplings(ModelKind::IsingEA, g, 3, {}) == generate_couplings(ModelKind::IsingEA, g, 4, {}));
    CHECK(generate_couplings(ModelKind::IsingEA, g, 3, {}).bond_count() == 192);
    CHECK_FALSE(generate_couplings(ModelKind::IsingEA, g, 3, {}).diluted());

    // Bimodal balance over many seeds: 4 sigma binomial band.
    std::size_t plus = 0, total = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const CouplingSet c = generate_couplings(ModelKind::IsingEA, g, s, {});
        for (auto j : c.couplings()) plus += j == 1;
        total += c.bond_count();
    }
    CHECK(std::abs(static_cast<double>(plus) - total / 2.0) < 4 * std::sqrt(total / 4.0));

    CouplingParams gp;
    gp.q = 5;
    const CouplingSet glassy = generate_couplings(ModelKind::GlassyPotts, g, 8, gp);
    REQUIRE(glassy.has_permutations());
    for (std::size_t b = 0; b < glassy.bond_count(); ++b) {
        const auto perm = glassy.permutation(b);
        std::set<int> seen(perm.begin(), perm.end());
        CHECK(seen.size() == 5);
        CHECK(*seen.rbegin() == 4);
    }

    CouplingParams dil;
    dil.occupation = 0.5;
    const CouplingSet d = generate_couplings(ModelKind::IsingEA, g, 8, dil);
    CHECK(d.diluted());
    std::size_t occupied = 0;
    for (auto e : d.occupancies()) occupied += e;
    CHECK(occupied > 10);
    CHECK(occupied < 54);
}

TEST_CASE("couplings file round trip and parse errors") {
    CouplingParams gp;
    gp.q = 3;
    const CouplingSet c = generate_couplings(ModelKind::GlassyPotts, LatticeGeometry(2), 5, gp);
    std::stringstream text;
    write_couplings(text, ModelKind::GlassyPotts, c, 5);
    const CouplingFile back = read_couplings(text);
    CHECK(back.kind == ModelKind::GlassyPotts);
    CHECK(back.seed == 5);
    CHECK(back.couplings == c);

    std::stringstream empty;
    CHECK_THROWS_AS(read_couplings(empty), ParseError);
    std::string full;
    {
        const CouplingSet e = generate_couplings(ModelKind::IsingEA, LatticeGeometry(2), 5, {});
        std::stringstream t;
        write_couplings(t, ModelKind::IsingEA, e, 5);
        full = t.str();
    }
    std::stringstream truncated(full.substr(0, full.size() / 2));
    try {
        read_couplings(truncated);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() > 1);
    }
    std::string bad = full;
    bad[bad.size() - 2] = '7';  // last coupling value
    std::stringstream bad_in(bad);
    CHECK_THROWS_AS(read_couplings(bad_in), ParseError);
}

TEST_CASE("model spec validation") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 2, Beta(0.5), 1);
    CHECK_THROWS_AS(m.check_config(SpinConfig(LatticeGeometry(4), SpinDomain::Ising, 2)), DomainError);
    CHECK_THROWS_AS(m.check_config(SpinConfig(LatticeGeometry(2), SpinDomain::Potts, 2)), DomainError);
    CHECK_THROWS_AS(Beta(-1.0), DomainError);
    CHECK(Beta::infinite().is_infinite());
    CHECK(parse_beta("inf").is_infinite());
    CHECK(parse_beta("0.25").value() == 0.25);
    CHECK_THROWS_AS(parse_beta("abc"), DomainError);
}
