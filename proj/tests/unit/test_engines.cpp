#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "engines/run.hpp"
#include "engines/scalar.hpp"
#include "engines/stepper.hpp"
#include "model/energy.hpp"
#include "support.hpp"

using namespace janus;

TEST_CASE("checkerboard schedule") {
    const LatticeGeometry g(4);
    const SweepSchedule s = checkerboard_partition(g);
    CHECK(s.half_size() == 32);
    std::set<std::uint32_t> all;
    for (Color c : {Color::Black, Color::White}) {
        const auto sites = s.sites(c);
        CHECK(sites.size() == 32);
        for (std::size_t k = 0; k < sites.size(); ++k) {
            CHECK(s.color(sites[k]) == c);
            CHECK(s.position(sites[k]) == k);
            if (k) CHECK(sites[k] > sites[k - 1]);
            for (auto nb : g.neighbor_indices(sites[k])) CHECK(s.color(nb) != c);
            all.insert(sites[k]);
        }
    }
    CHECK(all.size() == 64);
    CHECK_THROWS_AS(checkerboard_partition(LatticeGeometry(3)), DomainError);
}

TEST_CASE("mixed replica round trip") {
    const LatticeGeometry g(4);
    const SweepSchedule s = checkerboard_partition(g);
    const SpinConfig a = random_config(g, SpinDomain::Ising, 2, 1);
    const SpinConfig b = random_config(g, SpinDomain::Ising, 2, 2);
    const MixedReplicaPair pair = mix_replicas(a, b, s);
    for (std::size_t i = 0; i < g.site_count(); ++i) {
        CHECK(pair.mixed_a[i] == (s.color(i) == Color::Black ? a[i] : b[i]));
        CHECK(pair.mixed_b[i] == (s.color(i) == Color::Black ? b[i] : a[i]));
    }
    const auto [ra, rb] = unmix_replicas(pair, s);
    CHECK(ra == a);
    CHECK(rb == b);
}

TEST_CASE("scalar sweeps reproduce the site-by-site transcription") {
    auto cases = test::open_data("sweep_cases.txt");
    std::string tag, ctag, start_file, beta, rule;
    std::uint64_t seed = 0;
    int sweeps = 0;
    int checked = 0;
    while (cases >> tag >> ctag >> start_file >> beta >> seed >> sweeps >> rule) {
        CAPTURE(tag);
        const ModelSpec model = test::load_model(ctag, parse_beta(beta));
        SpinConfig config = start_file == "-" ? model.blank_config() : test::load_snapshot(start_file);
        const SiteUpdater updater(model);
        const SweepSchedule schedule = checkerboard_partition(model.geometry());
        prng::StreamSet streams = prng::fork_streams(seed, schedule.half_size());
        for (int s = 0; s < sweeps; ++s) {
            if (rule == "heatbath")
                heatbath_sweep(config, updater, schedule, streams);
            else
                metropolis_sweep(config, updater, schedule, streams);
        }
        CHECK(config == test::load_snapshot(tag + ".final"));
        CHECK(streams.total_draws() ==
              static_cast<std::uint64_t>(sweeps) * model.geometry().site_count() * (rule == "heatbath" ? 1 : 2));
        ++checked;
    }
    CHECK(checked == 5);
}

TEST_CASE("sweep argument validation") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 4, Beta(0.5), 1);
    const SiteUpdater up(m);
    const SweepSchedule s4 = checkerboard_partition(LatticeGeometry(4));
    const SweepSchedule s2 = checkerboard_partition(LatticeGeometry(2));
    SpinConfig c = m.blank_config();
    prng::StreamSet streams = prng::fork_streams(1, s4.half_size());
    CHECK_THROWS_AS(heatbath_sweep(c, up, s2, streams), DomainError);
    prng::StreamSet few = prng::fork_streams(1, 3);
    CHECK_THROWS_AS(heatbath_sweep(c, up, s4, few), DomainError);

    CouplingParams pp;
    pp.q = 3;
    const ModelSpec potts = make_model(ModelKind::Potts, 4, Beta(0.5), 1, pp);
    const SiteUpdater pup(potts);
    SpinConfig pc = potts.blank_config();
    CHECK_THROWS_AS(heatbath_sweep(pc, pup, s4, streams), DomainError);
}

TEST_CASE("zero temperature heat bath never raises the energy") {
    CouplingParams ferro;
    ferro.ferromagnetic = true;
    const ModelSpec m = make_model(ModelKind::IsingEA, 8, Beta::infinite(), 1, ferro);
    const SiteUpdater up(m);
    const SweepSchedule s = checkerboard_partition(m.geometry());
    SpinConfig c = random_config(m.geometry(), SpinDomain::Ising, 2, 5);
    prng::StreamSet streams = prng::fork_streams(6, s.half_size());
    double e = total_energy(m, c);
    for (int sweep = 0; sweep < 200; ++sweep)
        for (Color color : {Color::Black, Color::White}) {
            heatbath_half_sweep(c, up, s, streams, color);
            const double now = total_energy(m, c);
            REQUIRE(now <= e);
            e = now;
        }
}

TEST_CASE("a flat domain-wall slab is frozen at zero temperature") {
    CouplingParams ferro;
    ferro.ferromagnetic = true;
    const ModelSpec m = make_model(ModelKind::IsingEA, 8, Beta::infinite(), 1, ferro);
    SpinConfig c = m.blank_config();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (m.geometry().coord(i).z < 4) c.set(i, -1);
    CHECK(total_energy(m, c) == -1536.0 + 2 * 2 * 64);
    const SpinConfig start = c;
    const SiteUpdater up(m);
    const SweepSchedule s = checkerboard_partition(m.geometry());
    prng::StreamSet streams = prng::fork_streams(2, s.half_size());
    for (int sweep = 0; sweep < 100; ++sweep) heatbath_sweep(c, up, s, streams);
    CHECK(c == start);
}

TEST_CASE("run driver: trajectory shape, metadata and determinism") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 8, Beta(0.9), 7);
    RunOptions o;
    o.sweeps = 1000;
    o.measure_every = 10;
    o.seeds = RunSeeds::derive(7);
    const RunResult r = run(m, o);
    CHECK(r.trajectory.size() == 101);
    CHECK(r.trajectory.samples().front().sweep == 0);
    CHECK(r.trajectory.samples().back().sweep == 1000);
    CHECK(r.trajectory.meta("engine") == "scalar-hb");
    CHECK(r.trajectory.meta("thermalization") == "500");
    CHECK(r.trajectory.meta("dynamics_seed") == std::to_string(prng::stream_seed(7, 1)));
    CHECK(r.trajectory.samples().back().energy == total_energy(m, r.final_config));
    CHECK(run(m, o).trajectory == r.trajectory);

    RunOptions odd = o;
    odd.sweeps = 25;
    odd.measure_every = 10;
    const RunResult ro = run(m, odd);
    CHECK(ro.trajectory.size() == 4);  // 0, 10, 20, 25
    CHECK(ro.trajectory.samples().back().sweep == 25);
}

TEST_CASE("run driver: replay from an explicit start") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 4, Beta(0.7), 3);
    RunOptions o;
    o.sweeps = 50;
    o.seeds = RunSeeds::derive(3);
    const RunResult first = run(m, o);
    RunOptions explicit_start = o;
    explicit_start.initial = random_config(m.geometry(), SpinDomain::Ising, 2, o.seeds.init);
    const RunResult second = run(m, explicit_start);
    CHECK(first.final_config == second.final_config);
    CHECK(first.trajectory.samples() == second.trajectory.samples());
}

TEST_CASE("engines agree on the same seeds") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 8, Beta(0.8), 11);
    RunOptions o;
    o.sweeps = 60;
    o.measure_every = 5;
    o.seeds = RunSeeds::derive(11);
    o.grid_x = 2;
    o.grid_y = 4;
    o.lanes = 16;
    const auto final_of = [&](EngineKind e) {
        RunOptions x = o;
        x.engine = e;
        return run(m, x);
    };
    const RunResult hb = final_of(EngineKind::ScalarHeatBath);
    CHECK(final_of(EngineKind::Amsc).trajectory.samples() == hb.trajectory.samples());
    CHECK(final_of(EngineKind::Grid).final_config == hb.final_config);
    const RunResult metro = final_of(EngineKind::ScalarMetropolis);
    CHECK(final_of(EngineKind::Smsc).trajectory.samples() == metro.trajectory.samples());
}

TEST_CASE("engine compatibility diagnostics") {
    CouplingParams pp;
    pp.q = 4;
    const ModelSpec potts = make_model(ModelKind::Potts, 4, Beta(0.5), 1, pp);
    RunOptions o;
    o.sweeps = 1;
    for (EngineKind e : {EngineKind::ScalarHeatBath, EngineKind::Amsc, EngineKind::Smsc}) {
        o.engine = e;
        CHECK_THROWS_AS(check_engine_compatibility(potts, o), IncompatibleError);
    }
    o.engine = EngineKind::ScalarMetropolis;
    CHECK_NOTHROW(check_engine_compatibility(potts, o));
    o.engine = EngineKind::Grid;
    o.grid_x = o.grid_y = 2;
    CHECK_NOTHROW(check_engine_compatibility(potts, o));

    CouplingParams dil;
    dil.occupation = 0.7;
    const ModelSpec diluted = make_model(ModelKind::IsingEA, 4, Beta(0.5), 1, dil);
    o.engine = EngineKind::Amsc;
    CHECK_THROWS_AS(check_engine_compatibility(diluted, o), IncompatibleError);
    o.engine = EngineKind::ScalarHeatBath;
    CHECK_NOTHROW(check_engine_compatibility(diluted, o));

    CouplingParams field;
    field.field = 0.5;
    const ModelSpec hm = make_model(ModelKind::IsingEA, 4, Beta(0.5), 1, field);
    o.engine = EngineKind::Smsc;
    CHECK_THROWS_AS(check_engine_compatibility(hm, o), IncompatibleError);

    o.engine = EngineKind::ScalarHeatBath;
    o.measure_every = 0;
    CHECK_THROWS_AS(check_engine_compatibility(make_model(ModelKind::IsingEA, 4, Beta(0.5), 1), o), DomainError);
}

TEST_CASE("diluted heat bath with a field") {
    CouplingParams p;
    p.occupation = 0.6;
    p.field = 0.8;
    const ModelSpec m = make_model(ModelKind::IsingEA, 4, Beta(0.5), 21, p);
    RunOptions o;
    o.sweeps = 20;
    o.seeds = RunSeeds::derive(21);
    const RunResult r = run(m, o);
    CHECK(r.trajectory.size() == 21);
    CHECK(std::isfinite(r.trajectory.samples().back().energy));
}

TEST_CASE("stepper reports replicas") {
    const ModelSpec m = make_model(ModelKind::IsingEA, 4, Beta(0.5), 1);
    const SpinConfig start = m.blank_config();
    RunOptions o;
    o.lanes = 64;
    o.engine = EngineKind::Amsc;
    CHECK(make_stepper(m, start, o)->replicas() == 64);
    o.engine = EngineKind::Smsc;
    CHECK(make_stepper(m, start, o)->replicas() == 2);
    o.engine = EngineKind::Grid;
    o.grid_x = o.grid_y = 2;
    CHECK(make_stepper(m, start, o)->replicas() == 1);
}
