#include <vector>

#include "bitslice/amsc.hpp"
#include "bitslice/smsc.hpp"
#include "doctest.h"
#include "engines/scalar.hpp"
#include "model/energy.hpp"

using namespace janus;

namespace {

std::vector<SpinConfig> random_configs(const LatticeGeometry& g, int n, std::uint64_t seed) {
    std::vector<SpinConfig> out;
    for (int k = 0; k < n; ++k) out.push_back(random_config(g, SpinDomain::Ising, 2, prng::stream_seed(seed, k)));
    return out;
}

}  // namespace

TEST_CASE("pack and unpack lanes") {
    const LatticeGeometry g(4);
    for (int lanes : {1, 7, 64}) {
        const auto configs = random_configs(g, lanes, 3);
        const PackedEnsemble e = pack(configs);
        CHECK(e.lanes() == lanes);
        CHECK(unpack(e) == configs);
        for (std::size_t i = 0; i < g.site_count(); ++i) {
            CHECK((e.spins()[i] & ~e.lane_mask()) == 0);
            for (int k = 0; k < lanes; ++k) CHECK((((e.spins()[i] >> k) & 1u) != 0) == (configs[k][i] == 1));
        }
    }
    CHECK_THROWS_AS(pack(random_configs(g, 65, 1)), DomainError);
    std::vector<SpinConfig> mixed = random_configs(g, 2, 1);
    mixed.push_back(SpinConfig(LatticeGeometry(2), SpinDomain::Ising, 2));
    CHECK_THROWS_AS(pack(mixed), DomainError);
    const std::vector<SpinConfig> potts{SpinConfig(g, SpinDomain::Potts, 3)};
    CHECK_THROWS_AS(pack(potts), DomainError);
}

TEST_CASE("coupling packing rejects dilution") {
    const LatticeGeometry g(4);
    CouplingParams dil;
    dil.occupation = 0.5;
    const CouplingSet d = generate_couplings(ModelKind::IsingEA, g, 1, dil);
    const std::vector<SpinConfig> configs{SpinConfig(g, SpinDomain::Ising, 2)};
    const CouplingSet* ptrs[] = {&d};
    CHECK_THROWS_AS(pack(configs, ptrs), DomainError);
}

TEST_CASE("every AMSC lane equals a scalar heat-bath run with its couplings") {
    const LatticeGeometry g(4);
    const int lanes = 16;
    const Beta beta(0.7);
    std::vector<CouplingSet> sets;
    for (int k = 0; k < lanes; ++k) sets.push_back(generate_couplings(ModelKind::IsingEA, g, 100 + k, {}));
    std::vector<const CouplingSet*> ptrs;
    for (const auto& s : sets) ptrs.push_back(&s);
    const auto starts = random_configs(g, lanes, 9);

    PackedEnsemble ensemble = pack(starts, ptrs);
    const SweepSchedule schedule = checkerboard_partition(g);
    const HeatBathTable table = build_heatbath_table(beta, 0.0);
    prng::StreamSet streams = prng::fork_streams(55, schedule.half_size());
    const AmscEngine engine(g);
    for (int s = 0; s < 40; ++s) engine.sweep(ensemble, table, schedule, streams);
    const auto finals = unpack(ensemble);

    for (int k = 0; k < lanes; ++k) {
        CAPTURE(k);
        const ModelSpec m(ModelKind::IsingEA, beta, std::make_shared<const CouplingSet>(sets[k]));
        SpinConfig c = starts[k];
        prng::StreamSet scalar_streams = prng::fork_streams(55, schedule.half_size());
        const SiteUpdater up(m);
        for (int s = 0; s < 40; ++s) heatbath_sweep(c, up, schedule, scalar_streams);
        CHECK(c == finals[k]);
        if (k == 0) CHECK(scalar_streams == streams);
    }
}

TEST_CASE("AMSC at infinite beta with ferromagnetic couplings relaxes downhill") {
    const LatticeGeometry g(6);
    const CouplingSet ferro(g, 2);
    const ModelSpec m(ModelKind::IsingEA, Beta::infinite(), std::make_shared<const CouplingSet>(ferro));
    const auto starts = random_configs(g, 64, 4);
    std::vector<const CouplingSet*> ptrs(64, &ferro);
    PackedEnsemble e = pack(starts, ptrs);
    const SweepSchedule schedule = checkerboard_partition(g);
    prng::StreamSet streams = prng::fork_streams(1, schedule.half_size());
    const HeatBathTable table = build_heatbath_table(Beta::infinite(), 0.0);
    std::vector<double> before;
    for (const auto& c : starts) before.push_back(total_energy(m, c));
    for (int s = 0; s < 30; ++s) amsc_heatbath_sweep(e, table, schedule, streams);
    const auto after = unpack(e);
    for (int k = 0; k < 64; ++k) CHECK(total_energy(m, after[k]) <= before[k]);
}

TEST_CASE("bit-plane packing") {
    const LatticeGeometry g(6);
    const SpinConfig c = random_config(g, SpinDomain::Ising, 2, 12);
    const BitPlaneStore s = pack_planes(c);
    CHECK(s.side() == 6);
    CHECK(s.words().size() == 36);
    for (std::size_t i = 0; i < g.site_count(); ++i) {
        const Coord p = g.coord(i);
        CHECK(s.bit(p.x, p.y, p.z) == (c[i] == 1));
    }
    for (auto w : s.words()) CHECK((w & ~s.row_mask()) == 0);
    CHECK(unpack_planes(s) == c);
    CHECK_THROWS_AS(pack_planes(SpinConfig(g, SpinDomain::Potts, 3)), DomainError);
}

TEST_CASE("mixed planes round trip") {
    const LatticeGeometry g(4);
    const SweepSchedule schedule = checkerboard_partition(g);
    const SpinConfig a = random_config(g, SpinDomain::Ising, 2, 1);
    const SpinConfig b = random_config(g, SpinDomain::Ising, 2, 2);
    const MixedReplicaPair pair = mix_replicas(a, b, schedule);
    const MixedPlanes planes = pack_mixed(pair);
    CHECK(planes.a.layout() == PlaneLayout::MixedA);
    CHECK(planes.b.layout() == PlaneLayout::MixedB);
    const auto back = unmix_replicas(unpack_mixed(planes), schedule);
    CHECK(back.first == a);
    CHECK(back.second == b);
}

TEST_CASE("coupling planes mirror every bond at both endpoints") {
    const LatticeGeometry g(4);
    CouplingParams dil;
    dil.occupation = 0.8;
    const CouplingSet c = generate_couplings(ModelKind::IsingEA, g, 17, dil);
    const CouplingPlanes planes = pack_coupling_planes(c);
    REQUIRE(planes.sign.size() == kNeighborSlots);
    REQUIRE(planes.active.size() == kNeighborSlots);
    for (std::size_t i = 0; i < g.site_count(); ++i) {
        const Coord p = g.coord(i);
        for (int s = 0; s < kNeighborSlots; ++s) {
            const std::size_t bond = g.slot_bond(i, s);
            const std::size_t j = g.neighbor(i, s);
            CHECK(planes.sign[s].bit(p.x, p.y, p.z) == (c.coupling(bond) == -1));
            CHECK(planes.active[s].bit(p.x, p.y, p.z) == (c.occupancy(i) && c.occupancy(j)));
        }
    }
}

TEST_CASE("SMSC equals two scalar Metropolis replicas") {
    for (int side : {2, 4, 6, 8}) {
        CAPTURE(side);
        CouplingParams p;
        if (side == 6) p.occupation = 0.8;
        const ModelSpec m = make_model(ModelKind::IsingEA, side, Beta(0.6), 40 + side, p);
        const SweepSchedule schedule = checkerboard_partition(m.geometry());
        const SpinConfig r1 = random_config(m.geometry(), SpinDomain::Ising, 2, 1);
        const SpinConfig r2 = random_config(m.geometry(), SpinDomain::Ising, 2, 2);

        MixedPlanes planes = pack_mixed(mix_replicas(r1, r2, schedule));
        const CouplingPlanes cp = pack_coupling_planes(m.couplings());
        const MetropolisTable table = build_metropolis_table(m);
        prng::StreamSet s1 = prng::fork_streams(7, schedule.half_size());
        prng::StreamSet s2 = prng::fork_streams(8, schedule.half_size());
        for (int s = 0; s < 25; ++s) smsc_metropolis_sweep(planes, cp, table, schedule, s1, s2);
        const auto [got1, got2] = unmix_replicas(unpack_mixed(planes), schedule);

        const SiteUpdater up(m);
        SpinConfig want1 = r1, want2 = r2;
        prng::StreamSet t1 = prng::fork_streams(7, schedule.half_size());
        prng::StreamSet t2 = prng::fork_streams(8, schedule.half_size());
        for (int s = 0; s < 25; ++s) {
            metropolis_sweep(want1, up, schedule, t1, Color::Black);
            metropolis_sweep(want2, up, schedule, t2, Color::White);
        }
        CHECK(got1 == want1);
        CHECK(got2 == want2);
        CHECK(s1 == t1);
        CHECK(s2 == t2);
    }
}

TEST_CASE("SMSC on the widest supported lattice") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 64, Beta(0.9), 5);
    const SweepSchedule schedule = checkerboard_partition(m.geometry());
    const SpinConfig r1 = random_config(m.geometry(), SpinDomain::Ising, 2, 1);
    const SpinConfig r2 = random_config(m.geometry(), SpinDomain::Ising, 2, 2);
    MixedPlanes planes = pack_mixed(mix_replicas(r1, r2, schedule));
    prng::StreamSet s1 = prng::fork_streams(7, schedule.half_size());
    prng::StreamSet s2 = prng::fork_streams(8, schedule.half_size());
    smsc_metropolis_sweep(planes, pack_coupling_planes(m.couplings()), build_metropolis_table(m), schedule, s1, s2);
    const auto got = unmix_replicas(unpack_mixed(planes), schedule);

    const SiteUpdater up(m);
    SpinConfig want = r1;
    prng::StreamSet t1 = prng::fork_streams(7, schedule.half_size());
    metropolis_sweep(want, up, schedule, t1);
    CHECK(got.first == want);
    CHECK_THROWS_AS(BitPlaneStore(66), DomainError);
}
