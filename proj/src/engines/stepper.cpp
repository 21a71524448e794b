#include "engines/stepper.hpp"

#include <vector>

#include "bitslice/amsc.hpp"
#include "bitslice/smsc.hpp"
#include "common/error.hpp"
#include "engines/scalar.hpp"
#include "grid/domain_grid.hpp"

namespace janus {

namespace {

class ScalarStepper final : public Stepper {
public:
    ScalarStepper(const ModelSpec& model, SpinConfig start, std::uint64_t seed, bool heatbath)
        : updater_(model),
          schedule_(checkerboard_partition(model.geometry())),
          streams_(prng::fork_streams(seed, schedule_.half_size())),
          config_(std::move(start)),
          heatbath_(heatbath) {}

    void advance(std::uint64_t sweeps) override {
        for (std::uint64_t s = 0; s < sweeps; ++s) {
            if (heatbath_)
                heatbath_sweep(config_, updater_, schedule_, streams_);
            else
                metropolis_sweep(config_, updater_, schedule_, streams_);
        }
    }
    SpinConfig current() const override { return config_; }

private:
    SiteUpdater updater_;
    SweepSchedule schedule_;
    prng::StreamSet streams_;
    SpinConfig config_;
    bool heatbath_;
};

class AmscStepper final : public Stepper {
public:
    AmscStepper(const ModelSpec& model, const SpinConfig& start, const RunOptions& options)
        : engine_(model.geometry()),
          schedule_(checkerboard_partition(model.geometry())),
          streams_(prng::fork_streams(options.seeds.dynamics, schedule_.half_size())),
          table_(build_heatbath_table(model.beta(), model.couplings().field())),
          ensemble_(model.geometry(), 1) {
        std::vector<SpinConfig> configs{start};
        std::vector<CouplingSet> extra;
        extra.reserve(static_cast<std::size_t>(options.lanes));
        CouplingParams params = options.lane_params;
        params.q = 2;
        for (int k = 1; k < options.lanes; ++k) {
            extra.push_back(generate_couplings(ModelKind::IsingEA, model.geometry(),
                                               prng::stream_seed(options.seeds.coupling, k), params));
            configs.push_back(random_config(model.geometry(), SpinDomain::Ising, 2,
                                            prng::stream_seed(options.seeds.init, k)));
        }
        std::vector<const CouplingSet*> lanes{&model.couplings()};
        for (const auto& c : extra) lanes.push_back(&c);
        ensemble_ = pack(configs, lanes);
    }

    void advance(std::uint64_t sweeps) override {
        for (std::uint64_t s = 0; s < sweeps; ++s) engine_.sweep(ensemble_, table_, schedule_, streams_);
    }
    int replicas() const noexcept override { return ensemble_.lanes(); }
    SpinConfig current() const override {
        SpinConfig lane0(ensemble_.geometry(), SpinDomain::Ising, 2);
        auto raw = lane0.raw();
        const auto spins = ensemble_.spins();
        for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = (spins[i] & 1u) ? 1 : -1;
        return lane0;
    }

private:
    AmscEngine engine_;
    SweepSchedule schedule_;
    prng::StreamSet streams_;
    HeatBathTable table_;
    PackedEnsemble ensemble_;
};

class SmscStepper final : public Stepper {
public:
    SmscStepper(const ModelSpec& model, const SpinConfig& start, const RunOptions& options)
        : schedule_(checkerboard_partition(model.geometry())),
          table_(build_metropolis_table(model)),
          couplings_(pack_coupling_planes(model.couplings())),
          replica1_(prng::fork_streams(options.seeds.dynamics, schedule_.half_size())),
          replica2_(prng::fork_streams(prng::stream_seed(options.seeds.dynamics, 1), schedule_.half_size())),
          planes_(pack_mixed(mix_replicas(start,
                                          random_config(model.geometry(), SpinDomain::Ising, 2,
                                                        prng::stream_seed(options.seeds.init, 1)),
                                          schedule_))) {}

    void advance(std::uint64_t sweeps) override {
        for (std::uint64_t s = 0; s < sweeps; ++s)
            smsc_metropolis_sweep(planes_, couplings_, table_, schedule_, replica1_, replica2_);
    }
    int replicas() const noexcept override { return 2; }
    SpinConfig current() const override { return unmix_replicas(unpack_mixed(planes_), schedule_).first; }

private:
    SweepSchedule schedule_;
    MetropolisTable table_;
    CouplingPlanes couplings_;
    prng::StreamSet replica1_;
    prng::StreamSet replica2_;
    MixedPlanes planes_;
};

class GridStepper final : public Stepper {
public:
    GridStepper(const ModelSpec& model, const SpinConfig& start, const RunOptions& options)
        : updater_(model),
          schedule_(checkerboard_partition(model.geometry())),
          streams_(prng::fork_streams(options.seeds.dynamics, schedule_.half_size())),
          grid_(partition_lattice(model.geometry(), options.grid_x, options.grid_y)),
          rule_(model.domain() == SpinDomain::Ising ? UpdateRule::HeatBath : UpdateRule::Metropolis) {
        grid_options_.threads = options.threads;
        grid_.load(start);
    }

    void advance(std::uint64_t sweeps) override {
        parallel_sweeps(grid_, updater_, schedule_, streams_, rule_, sweeps, grid_options_);
    }
    SpinConfig current() const override { return grid_.gather(); }

private:
    SiteUpdater updater_;
    SweepSchedule schedule_;
    prng::StreamSet streams_;
    DomainGrid grid_;
    UpdateRule rule_;
    GridOptions grid_options_;
};

}  // namespace

std::unique_ptr<Stepper> make_stepper(const ModelSpec& model, const SpinConfig& start, const RunOptions& options) {
    check_engine_compatibility(model, options);
    model.check_config(start);
    switch (options.engine) {
        case EngineKind::ScalarHeatBath: return std::make_unique<ScalarStepper>(model, start, options.seeds.dynamics, true);
        case EngineKind::ScalarMetropolis:
            return std::make_unique<ScalarStepper>(model, start, options.seeds.dynamics, false);
        case EngineKind::Amsc: return std::make_unique<AmscStepper>(model, start, options);
        case EngineKind::Smsc: return std::make_unique<SmscStepper>(model, start, options);
        case EngineKind::Grid: return std::make_unique<GridStepper>(model, start, options);
    }
    throw DomainError("unknown engine");
}

}  // namespace janus
