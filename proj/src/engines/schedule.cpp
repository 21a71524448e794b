#include "engines/schedule.hpp"

#include <string>

#include "common/error.hpp"

namespace janus {

SweepSchedule::SweepSchedule(const LatticeGeometry& geometry)
    : geometry_(geometry), position_(geometry.site_count()) {
    if (geometry.side() % 2 != 0)
        throw DomainError("checkerboard decomposition needs an even lattice side, got L = " +
                          std::to_string(geometry.side()));
    for (auto& s : sets_) s.reserve(geometry.site_count() / 2);
    for (std::size_t i = 0; i < geometry.site_count(); ++i) {
        auto& set = sets_[geometry.parity(i)];
        position_[i] = static_cast<std::uint32_t>(set.size());
        set.push_back(static_cast<std::uint32_t>(i));
    }
}

SweepSchedule checkerboard_partition(const LatticeGeometry& geometry) { return SweepSchedule(geometry); }

MixedReplicaPair mix_replicas(const SpinConfig& replica1, const SpinConfig& replica2, const SweepSchedule& schedule,
                              std::shared_ptr<const CouplingSet> couplings) {
    if (!(replica1.geometry() == replica2.geometry()) || !(replica1.geometry() == schedule.geometry()))
        throw DomainError("mix_replicas: replicas and schedule must share one geometry");
    if (replica1.domain() != replica2.domain() || replica1.q() != replica2.q())
        throw DomainError("mix_replicas: replicas have different spin domains");
    if (couplings && !(couplings->geometry() == schedule.geometry()))
        throw DomainError("mix_replicas: couplings geometry differs");
    MixedReplicaPair pair{replica1, replica2, std::move(couplings)};
    auto a = pair.mixed_a.raw();
    auto b = pair.mixed_b.raw();
    for (auto site : schedule.sites(Color::White)) std::swap(a[site], b[site]);
    return pair;
}

std::pair<SpinConfig, SpinConfig> unmix_replicas(const MixedReplicaPair& pair, const SweepSchedule& schedule) {
    if (!(pair.mixed_a.geometry() == schedule.geometry()) || !(pair.mixed_b.geometry() == schedule.geometry()))
        throw DomainError("unmix_replicas: geometry mismatch");
    std::pair<SpinConfig, SpinConfig> out{pair.mixed_a, pair.mixed_b};
    auto r1 = out.first.raw();
    auto r2 = out.second.raw();
    for (auto site : schedule.sites(Color::White)) std::swap(r1[site], r2[site]);
    return out;
}

}  // namespace janus
