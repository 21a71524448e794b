#include "engines/scalar.hpp"

#include "common/error.hpp"

namespace janus {

void check_sweep_arguments(const SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                           const prng::StreamSet& streams) {
    updater.model().check_config(config);
    if (!(schedule.geometry() == config.geometry()))
        throw DomainError("sweep schedule and configuration sizes differ");
    if (streams.size() < schedule.half_size())
        throw DomainError("stream set has " + std::to_string(streams.size()) + " wheels, need " +
                          std::to_string(schedule.half_size()));
}

void heatbath_half_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                         prng::StreamSet& streams, Color color) {
    check_sweep_arguments(config, updater, schedule, streams);
    if (!updater.supports_heatbath()) throw IncompatibleError("heat-bath engine requires an Ising model");
    auto values = config.raw();
    const auto sites = schedule.sites(color);
    for (std::size_t p = 0; p < sites.size(); ++p) {
        const std::uint32_t site = sites[p];
        values[site] = updater.heatbath(site, updater.gather(values, site), streams[p]);
    }
}

void heatbath_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                    prng::StreamSet& streams, Color first) {
    heatbath_half_sweep(config, updater, schedule, streams, first);
    heatbath_half_sweep(config, updater, schedule, streams, other(first));
}

void metropolis_half_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                           prng::StreamSet& streams, Color color) {
    check_sweep_arguments(config, updater, schedule, streams);
    auto values = config.raw();
    const auto sites = schedule.sites(color);
    for (std::size_t p = 0; p < sites.size(); ++p) {
        const std::uint32_t site = sites[p];
        values[site] = updater.metropolis(site, values[site], updater.gather(values, site), streams[p]);
    }
}

void metropolis_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                      prng::StreamSet& streams, Color first) {
    metropolis_half_sweep(config, updater, schedule, streams, first);
    metropolis_half_sweep(config, updater, schedule, streams, other(first));
}

}  // namespace janus
