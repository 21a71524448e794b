#pragma once

#include "engines/schedule.hpp"
#include "engines/site_update.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

/// Scalar reference engines. A sweep updates one color, then the other; each
/// site draws from stream `schedule.position(site)`, so a heat-bath sweep
/// consumes N words and a Metropolis sweep 2N.

void heatbath_half_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                         prng::StreamSet& streams, Color color);

void heatbath_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                    prng::StreamSet& streams, Color first = Color::Black);

void metropolis_half_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                           prng::StreamSet& streams, Color color);

void metropolis_sweep(SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                      prng::StreamSet& streams, Color first = Color::Black);

/// Shared argument validation; throws DomainError.
void check_sweep_arguments(const SpinConfig& config, const SiteUpdater& updater, const SweepSchedule& schedule,
                           const prng::StreamSet& streams);

}  // namespace janus
