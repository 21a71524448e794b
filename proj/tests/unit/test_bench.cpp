#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bench/bench.hpp"
#include "bench/run_config.hpp"
#include "bench/snapshot.hpp"
#include "bench/trajectory_io.hpp"
#include "bench/verify.hpp"
#include "doctest.h"
#include "prng/parisi_rapuano.hpp"
#include "support.hpp"

using namespace janus;

TEST_CASE("snapshot round trip") {
    CouplingParams p;
    p.q = 20;
    for (auto [kind, q] : {std::pair{ModelKind::IsingEA, 2}, {ModelKind::ChiralPotts, 20}}) {
        const LatticeGeometry g(4);
        const SpinConfig c = random_config(g, domain_of(kind), q, 3);
        std::stringstream text;
        write_snapshot(text, kind, c);
        const Snapshot back = read_snapshot(text);
        CHECK(back.kind == kind);
        CHECK(back.config == c);
    }
    std::stringstream text;
    write_snapshot(text, ModelKind::IsingEA, SpinConfig(LatticeGeometry(2), SpinDomain::Ising, 2));
    CHECK(text.str() == "janus-snap v1 ising-ea 2 2\n11\n11\n11\n11\n");
    CHECK_THROWS_AS(write_snapshot(text, ModelKind::Potts, SpinConfig(LatticeGeometry(2), SpinDomain::Ising, 2)),
                    DomainError);
}

TEST_CASE("snapshot parse errors carry line numbers") {
    const std::pair<const char*, std::size_t> cases[] = {
        {"", 1},
        {"janus-snp v1 ising-ea 2 2\n", 1},
        {"janus-snap v2 ising-ea 2 2\n", 1},
        {"janus-snap v1 xy 2 2\n", 1},
        {"janus-snap v1 ising-ea 2 3\n", 1},
        {"janus-snap v1 ising-ea 2 2\n11\n11\n", 4},
        {"janus-snap v1 ising-ea 2 2\n11\n111\n11\n11\n", 3},
        {"janus-snap v1 potts 2 3\n00\n03\n00\n00\n", 3},
        {"janus-snap v1 ising-ea 2 2\n11\n11\n11\n11\nextra\n", 6},
    };
    for (auto [text, line] : cases) {
        CAPTURE(text);
        std::stringstream in(text);
        try {
            read_snapshot(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    }
}

TEST_CASE("trajectory CSV round trip") {
    Trajectory t;
    t.add({0, -1.0 / 3.0, 0.125});
    t.add({10, -24.0, 1.0});
    t.add({20, 1e-17, -0.1});
    t.set_meta("engine", "scalar-hb");
    std::stringstream csv;
    write_trajectory_csv(csv, t);
    CHECK(csv.str().rfind("sweep,energy,magnetization\n", 0) == 0);
    const Trajectory back = read_trajectory_csv(csv);
    CHECK(back.samples() == t.samples());

    Trajectory potts;
    potts.add({0, 2.5, std::nullopt});
    std::stringstream pcsv;
    write_trajectory_csv(pcsv, potts);
    CHECK(pcsv.str() == "sweep,energy,magnetization\n0,2.5,\n");
    CHECK(read_trajectory_csv(pcsv).samples() == potts.samples());

    std::stringstream meta;
    write_trajectory_meta(meta, t);
    CHECK(meta.str() == "engine=scalar-hb\n");

    std::stringstream bad("sweep,energy,magnetization\n0,1,\n1,x,\n");
    try {
        read_trajectory_csv(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("save_trajectory writes both files") {
    const auto dir = std::filesystem::temp_directory_path() / "janus_test_bench";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "t.csv").string();
    Trajectory t;
    t.add({0, 1.0, 1.0});
    t.set_meta("seed", "1");
    save_trajectory(path, t);
    CHECK(std::filesystem::exists(path));
    CHECK(std::filesystem::exists(path + ".meta"));
    CHECK_THROWS_AS(save_trajectory((dir / "missing" / "t.csv").string(), t), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("run configuration parsing") {
    std::stringstream text(R"(# spin glass
[model]
kind = ising-ea
L = 6
beta = 1.1   # cold
[run]
engine = grid
grid = 3x1
sweeps = 200
measure_every = 5
[seeds]
master = 9
init = 4
[output]
trajectory = out.csv
)");
    const RunConfig c = parse_run_config(text);
    CHECK(c.model.side == 6);
    CHECK(c.model.beta == Beta(1.1));
    CHECK(c.engine == EngineKind::Grid);
    CHECK(c.grid_x == 3);
    CHECK(c.grid_y == 1);
    CHECK(c.sweeps == 200);
    CHECK(c.seeds().coupling == 9);
    CHECK(c.seeds().dynamics == prng::stream_seed(9, 1));
    CHECK(c.seeds().init == 4);
    CHECK(c.build().couplings() == make_model(ModelKind::IsingEA, 6, Beta(1.1), 9).couplings());
    CHECK(c.trajectory == "out.csv");

    std::stringstream canonical;
    write_run_config(canonical, c);
    CHECK(parse_run_config(canonical) == c);

    RunConfig d;
    apply_setting(d, "model.kind", "potts");
    apply_setting(d, "model.q", "5");
    apply_setting(d, "model.ferromagnetic", "true");
    apply_setting(d, "run.engine", "scalar-metro");
    CHECK(d.model.params.q == 5);
    CHECK(d.model.params.ferromagnetic);
    CHECK(d.options().lane_params == d.model.params);
    CHECK(d.build().kind() == ModelKind::Potts);
    for (const auto& key : run_config_keys()) CHECK(key.find('.') != std::string::npos);
}

TEST_CASE("run configuration errors") {
    RunConfig c;
    CHECK_THROWS_AS(apply_setting(c, "model.colour", "1"), DomainError);
    CHECK_THROWS_AS(apply_setting(c, "model.L", "-2"), DomainError);
    CHECK_THROWS_AS(apply_setting(c, "model.occupation", "1.5"), DomainError);
    CHECK_THROWS_AS(apply_setting(c, "run.engine", "gpu"), DomainError);
    CHECK_THROWS_AS(apply_setting(c, "run.grid", "4"), DomainError);
    CHECK_THROWS_AS(apply_setting(c, "model.ferromagnetic", "maybe"), DomainError);

    const std::pair<const char*, std::size_t> cases[] = {
        {"[model]\nL = 4\n[nope]\n", 3},
        {"L = 4\n", 1},
        {"[model]\nL 4\n", 2},
        {"[model]\n\n# c\nbeta = hot\n", 4},
        {"[run\n", 1},
    };
    for (auto [text, line] : cases) {
        CAPTURE(text);
        std::stringstream in(text);
        try {
            parse_run_config(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    }
    CHECK_THROWS_AS(load_run_config("/nonexistent/janus.cfg"), IoError);
}

TEST_CASE("couplings file in a run configuration") {
    RunConfig c;
    c.model.side = 2;
    c.couplings_file = test::data_path("ea-L2-s11.couplings");
    const ModelSpec m = c.build();
    CHECK(m.couplings() == test::load_couplings("ea-L2-s11").couplings);
    c.model.side = 4;
    CHECK_THROWS_AS(c.build(), DomainError);
    c.model.side = 2;
    c.model.kind = ModelKind::Potts;
    CHECK_THROWS_AS(c.build(), DomainError);
    c.model.kind = ModelKind::IsingEA;
    c.couplings_file = "/nonexistent.couplings";
    CHECK_THROWS_AS(c.build(), IoError);
}

TEST_CASE("benchmark contract") {
    BenchOptions o;
    o.model.side = 8;
    o.model.beta = Beta(0.8);
    o.engines = {EngineKind::ScalarHeatBath, EngineKind::ScalarHeatBath, EngineKind::Amsc};
    o.repetitions = 3;
    o.min_seconds = 0.01;
    const BenchReport r = run_bench(o);
    REQUIRE(r.timings.size() == 3);
    for (const auto& t : r.timings) {
        CHECK(t.ns_per_update.size() == 3);
        CHECK(t.median_ns > 0);
        CHECK(t.median_ns == median(t.ns_per_update));
    }
    CHECK(r.timings[2].replicas == 64);
    CHECK(r.ratio(0, 0) == 1.0);
    CHECK(r.ratio(0, 1) == doctest::Approx(1.0).epsilon(0.5));
    CHECK(r.ratio(0, 2) * r.ratio(2, 0) == doctest::Approx(1.0));

    std::stringstream csv, table;
    write_bench_csv(csv, r);
    write_bench_table(table, r);
    CHECK(csv.str().find("engine,sweeps,replicas,median_ns,run1,run2,run3") != std::string::npos);
    CHECK(table.str().find("NOT reproducible in software") != std::string::npos);
    CHECK(fpga_literature().size() == 5);

    BenchOptions potts = o;
    potts.model.kind = ModelKind::Potts;
    potts.model.params.q = 3;
    CHECK_THROWS_AS(run_bench(potts), IncompatibleError);
    o.engines.clear();
    CHECK_THROWS_AS(run_bench(o), DomainError);
    CHECK(median({3.0, 1.0, 2.0, 10.0}) == 2.5);
}

TEST_CASE("verify suite passes and catches a corrupted heat-bath table") {
    const VerifyReport good = run_verify();
    for (const auto& c : good.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
    CHECK(good.passed());
    CHECK(good.checks.size() >= 12);

    const VerifyReport bad = run_verify(VerifyFault::HeatBathTable);
    CHECK_FALSE(bad.passed());
    bool symmetry_failed = false;
    for (const auto& c : bad.checks)
        if (c.name == "heatbath-table-symmetry") symmetry_failed = !c.passed;
    CHECK(symmetry_failed);
}
