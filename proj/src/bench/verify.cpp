#include "bench/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bench/snapshot.hpp"
#include "bitslice/amsc.hpp"
#include "bitslice/smsc.hpp"
#include "coloring/coloring.hpp"
#include "common/hash.hpp"
#include "engines/scalar.hpp"
#include "grid/domain_grid.hpp"
#include "model/energy.hpp"
#include "model/model.hpp"
#include "observables/exact.hpp"
#include "observables/statistics.hpp"

namespace janus {

namespace {

std::string format(const char* fmt, double a, double b = 0, double c = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

struct Suite {
    VerifyFault fault;

    HeatBathTable heatbath(const ModelSpec& model) const {
        HeatBathTable t = build_heatbath_table(model.beta(), model.couplings().field());
        if (fault == VerifyFault::HeatBathTable) t.set_threshold(2, t.threshold(0));
        return t;
    }

    SiteUpdater updater(const ModelSpec& model) const {
        return SiteUpdater(model, heatbath(model), build_metropolis_table(model));
    }

    // --- checks; each returns a detail string and sets `ok` ---

    std::string prng_digest(bool& ok) const {
        // FNV-1a over the first 1000 words of seed 1, 4 little-endian bytes
        // each, as produced by the independent reference implementation.
        constexpr std::uint64_t expected = 0x8c3566766e0abd20ull;
        prng::PRWheel wheel = prng::seed_wheel(1);
        std::uint64_t h = kFnvOffset;
        for (int k = 0; k < 1000; ++k) {
            const std::uint32_t w = wheel.next();
            for (int i = 0; i < 4; ++i) {
                h ^= (w >> (8 * i)) & 0xFFu;
                h *= kFnvPrime;
            }
        }
        ok = h == expected;
        char buf[96];
        std::snprintf(buf, sizeof buf, "digest 0x%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    std::string heatbath_symmetry(bool& ok) const {
        const ModelSpec model = make_model(ModelKind::IsingEA, 4, Beta(0.4), 1);
        const HeatBathTable t = heatbath(model);
        ok = t.threshold(0) == kProbabilityOne / 2;
        for (int n = 2; n <= HeatBathTable::kMaxSum; n += 2) {
            ok = ok && t.threshold(n) + t.threshold(-n) == kProbabilityOne;
            ok = ok && t.threshold(n) > t.threshold(n - 2);
        }
        return ok ? "P(+|n) + P(+|-n) = 1 and increasing in n" : "threshold(n) + threshold(-n) != 2^32 or not increasing";
    }

    std::string metropolis_monotone(bool& ok) const {
        const ModelSpec model = make_model(ModelKind::IsingEA, 4, Beta(0.7), 1);
        const MetropolisTable t = build_metropolis_table(model);
        ok = t.threshold(0) == kProbabilityOne;
        for (int d : t.spectrum()) ok = ok && t.threshold(d) < kProbabilityOne && t.threshold(d) > 0;
        for (std::size_t i = 1; i < t.spectrum().size(); ++i)
            ok = ok && t.threshold(t.spectrum()[i]) < t.threshold(t.spectrum()[i - 1]);
        return "spectrum size " + std::to_string(t.spectrum().size());
    }

    std::string amsc_lanes(bool& ok) const {
        const LatticeGeometry g(4);
        const SweepSchedule schedule = checkerboard_partition(g);
        const int lanes = 8;
        const Beta beta(0.8);
        std::vector<CouplingSet> couplings;
        std::vector<SpinConfig> starts;
        for (int k = 0; k < lanes; ++k) {
            couplings.push_back(generate_couplings(ModelKind::IsingEA, g, 100 + k, {}));
            starts.push_back(random_config(g, SpinDomain::Ising, 2, 200 + k));
        }
        std::vector<const CouplingSet*> ptrs;
        for (const auto& c : couplings) ptrs.push_back(&c);
        PackedEnsemble ensemble = pack(starts, ptrs);
        const HeatBathTable table = heatbath(ModelSpec(ModelKind::IsingEA, beta, std::make_shared<CouplingSet>(couplings[0])));
        prng::StreamSet streams = prng::fork_streams(300, schedule.half_size());
        const AmscEngine engine(g);
        for (int s = 0; s < 100; ++s) engine.sweep(ensemble, table, schedule, streams);
        const auto result = unpack(ensemble);

        int matching = 0;
        for (int k = 0; k < lanes; ++k) {
            const ModelSpec model(ModelKind::IsingEA, beta, std::make_shared<CouplingSet>(couplings[k]));
            const SiteUpdater up = updater(model);
            SpinConfig config = starts[k];
            prng::StreamSet replay = prng::fork_streams(300, schedule.half_size());
            for (int s = 0; s < 100; ++s) heatbath_sweep(config, up, schedule, replay);
            matching += config == result[k];
        }
        ok = matching == lanes;
        return std::to_string(matching) + "/" + std::to_string(lanes) + " lanes bit-identical after 100 sweeps";
    }

    std::string smsc_replicas(bool& ok) const {
        ok = true;
        std::string detail;
        for (int side : {2, 4, 8}) {
            const ModelSpec model = make_model(ModelKind::IsingEA, side, Beta(0.6), 400 + side);
            const SweepSchedule schedule = checkerboard_partition(model.geometry());
            SpinConfig r1 = random_config(model.geometry(), SpinDomain::Ising, 2, 500 + side);
            SpinConfig r2 = random_config(model.geometry(), SpinDomain::Ising, 2, 600 + side);
            MixedPlanes planes = pack_mixed(mix_replicas(r1, r2, schedule));
            const CouplingPlanes cp = pack_coupling_planes(model.couplings());
            const MetropolisTable table = build_metropolis_table(model);
            prng::StreamSet a = prng::fork_streams(700, schedule.half_size());
            prng::StreamSet b = prng::fork_streams(701, schedule.half_size());
            for (int s = 0; s < 100; ++s) smsc_metropolis_sweep(planes, cp, table, schedule, a, b);
            const auto [out1, out2] = unmix_replicas(unpack_mixed(planes), schedule);

            const SiteUpdater up = updater(model);
            prng::StreamSet ra = prng::fork_streams(700, schedule.half_size());
            prng::StreamSet rb = prng::fork_streams(701, schedule.half_size());
            for (int s = 0; s < 100; ++s) {
                metropolis_sweep(r1, up, schedule, ra, Color::Black);
                metropolis_sweep(r2, up, schedule, rb, Color::White);
            }
            const bool same = r1 == out1 && r2 == out2;
            ok = ok && same;
            detail += "L=" + std::to_string(side) + (same ? " ok " : " MISMATCH ");
        }
        return detail;
    }

    std::string grid_shapes(bool& ok) const {
        const ModelSpec model = make_model(ModelKind::IsingEA, 8, Beta(0.9), 800);
        const SweepSchedule schedule = checkerboard_partition(model.geometry());
        const SpinConfig start = random_config(model.geometry(), SpinDomain::Ising, 2, 801);
        const SiteUpdater up = updater(model);

        SpinConfig reference = start;
        prng::StreamSet rs = prng::fork_streams(802, schedule.half_size());
        for (int s = 0; s < 50; ++s) heatbath_sweep(reference, up, schedule, rs);

        ok = true;
        std::string detail;
        for (int n : {1, 2, 4}) {
            DomainGrid grid = partition_lattice(model.geometry(), n, n);
            grid.load(start);
            prng::StreamSet gs = prng::fork_streams(802, schedule.half_size());
            parallel_sweeps(grid, up, schedule, gs, UpdateRule::HeatBath, 50);
            const bool same = grid.gather() == reference;
            ok = ok && same;
            detail += std::to_string(n) + "x" + std::to_string(n) + (same ? " ok " : " MISMATCH ");
        }

        // Potts Metropolis through the same decomposition.
        CouplingParams params;
        params.q = 4;
        const ModelSpec potts = make_model(ModelKind::GlassyPotts, 8, Beta(0.7), 803, params);
        const SiteUpdater pup = updater(potts);
        const SpinConfig pstart = random_config(potts.geometry(), SpinDomain::Potts, 4, 804);
        SpinConfig pref = pstart;
        prng::StreamSet ps = prng::fork_streams(805, schedule.half_size());
        for (int s = 0; s < 30; ++s) metropolis_sweep(pref, pup, schedule, ps);
        DomainGrid pgrid = partition_lattice(potts.geometry(), 2, 4);
        pgrid.load(pstart);
        prng::StreamSet pgs = prng::fork_streams(805, schedule.half_size());
        parallel_sweeps(pgrid, pup, schedule, pgs, UpdateRule::Metropolis, 30);
        const bool same = pgrid.gather() == pref;
        ok = ok && same;
        return detail + (same ? "glassy-potts 2x4 ok" : "glassy-potts 2x4 MISMATCH");
    }

    std::string exact_energy(bool& ok, ModelKind kind, int q, double beta, bool heat) const {
        CouplingParams params;
        params.q = q;
        const ModelSpec model = make_model(kind, 2, Beta(beta), 900 + q, params);
        const double exact = exact_boltzmann_average(model, Observable::Energy);
        const SweepSchedule schedule = checkerboard_partition(model.geometry());
        const SiteUpdater up = updater(model);
        SpinConfig config = random_config(model.geometry(), model.domain(), q, 901);
        prng::StreamSet streams = prng::fork_streams(902, schedule.half_size());
        const int sweeps = 200000;
        std::vector<double> series;
        series.reserve(sweeps);
        for (int s = 0; s < 1000; ++s)
            heat ? heatbath_sweep(config, up, schedule, streams) : metropolis_sweep(config, up, schedule, streams);
        for (int s = 0; s < sweeps; ++s) {
            heat ? heatbath_sweep(config, up, schedule, streams) : metropolis_sweep(config, up, schedule, streams);
            series.push_back(total_energy(model, config));
        }
        const Estimate e = mc_average(series);
        const double z = std::abs(e.mean - exact) / e.error;
        ok = z < 4.0;
        return format("<E> = %.5f +/- %.5f, exact %.5f", e.mean, e.error, exact) + format(" (%.2f sigma)", z);
    }

    std::string thermodynamic_identity(bool& ok) const {
        const ModelSpec model = make_model(ModelKind::IsingEA, 2, Beta(0.4), 950);
        const double direct = exact_boltzmann_average(model, Observable::Energy);
        const double fd = energy_from_log_z(model, 1e-4);
        const double rel = std::abs(direct - fd) / std::max(1.0, std::abs(direct));
        ok = rel < 1e-6;
        return format("<E> = %.10f, -dlogZ/dbeta = %.10f, rel %.2e", direct, fd, rel);
    }

    std::string partition_validity(bool& ok) const {
        ok = true;
        std::size_t worst = 0;
        for (int i = 0; i < 200; ++i) {
            const std::size_t n = 50 + static_cast<std::size_t>(i) * 7;
            const double cm = 1.0 + (i % 8);
            const Graph g = random_graph(n, cm, 1000 + i);
            const IndependentPartition p = partition_independent_sets(g);
            ok = ok && is_valid_partition(g, p) && p.size() <= g.max_degree() + 1;
            worst = std::max(worst, p.size());
        }
        return "200 graphs, at most " + std::to_string(worst) + " subsets";
    }

    std::string snapshot_replay(bool& ok) const {
        const ModelSpec model = make_model(ModelKind::IsingEA, 8, Beta(0.5), 1100);
        const SweepSchedule schedule = checkerboard_partition(model.geometry());
        const SiteUpdater up = updater(model);
        const SpinConfig start = random_config(model.geometry(), SpinDomain::Ising, 2, 1101);

        SpinConfig straight = start;
        prng::StreamSet s1 = prng::fork_streams(1102, schedule.half_size());
        for (int s = 0; s < 40; ++s) heatbath_sweep(straight, up, schedule, s1);

        DomainGrid grid = partition_lattice(model.geometry(), 2, 2);
        grid.load(start);
        prng::StreamSet s2 = prng::fork_streams(1102, schedule.half_size());
        parallel_sweeps(grid, up, schedule, s2, UpdateRule::HeatBath, 20);
        std::stringstream text;
        write_snapshot(text, model.kind(), grid.gather());
        Snapshot snap = read_snapshot(text);
        for (int s = 0; s < 20; ++s) heatbath_sweep(snap.config, up, schedule, s2);
        ok = snap.config == straight;
        return ok ? "grid 20 sweeps -> snapshot -> scalar 20 sweeps matches 40 scalar sweeps" : "replay diverged";
    }
};

}  // namespace

bool VerifyReport::passed() const noexcept {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

VerifyReport run_verify(VerifyFault fault, const std::function<void(const VerifyCheck&)>& progress) {
    const Suite suite{fault};
    using Body = std::function<std::string(bool&)>;
    const std::vector<std::pair<std::string, Body>> plan = {
        {"prng-reference-digest", [&](bool& ok) { return suite.prng_digest(ok); }},
        {"heatbath-table-symmetry", [&](bool& ok) { return suite.heatbath_symmetry(ok); }},
        {"metropolis-table-monotone", [&](bool& ok) { return suite.metropolis_monotone(ok); }},
        {"amsc-lane-replay", [&](bool& ok) { return suite.amsc_lanes(ok); }},
        {"smsc-mixed-replica-replay", [&](bool& ok) { return suite.smsc_replicas(ok); }},
        {"grid-shape-replay", [&](bool& ok) { return suite.grid_shapes(ok); }},
        {"snapshot-cross-engine-replay", [&](bool& ok) { return suite.snapshot_replay(ok); }},
        {"exact-energy-ising-heatbath",
         [&](bool& ok) { return suite.exact_energy(ok, ModelKind::IsingEA, 2, 0.5, true); }},
        {"exact-energy-ising-metropolis",
         [&](bool& ok) { return suite.exact_energy(ok, ModelKind::IsingEA, 2, 0.5, false); }},
        {"exact-energy-glassy-potts-metropolis",
         [&](bool& ok) { return suite.exact_energy(ok, ModelKind::GlassyPotts, 3, 0.6, false); }},
        {"thermodynamic-identity", [&](bool& ok) { return suite.thermodynamic_identity(ok); }},
        {"independent-set-partition", [&](bool& ok) { return suite.partition_validity(ok); }},
    };

    VerifyReport report;
    for (const auto& [name, body] : plan) {
        VerifyCheck check;
        check.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            bool ok = false;
            check.detail = body(ok);
            check.passed = ok;
        } catch (const std::exception& e) {
            check.passed = false;
            check.detail = std::string("exception: ") + e.what();
        }
        check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) progress(check);
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace janus
