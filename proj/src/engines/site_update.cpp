#include "engines/site_update.hpp"

namespace janus {

Stencil::Stencil(const ModelSpec& model) {
    const auto& g = model.geometry();
    const auto& c = model.couplings();
    const std::size_t n = g.site_count();
    neighbors_.resize(kNeighborSlots * n);
    bonds_.resize(kNeighborSlots * n);
    weights_.resize(kNeighborSlots * n);
    for (std::size_t i = 0; i < n; ++i)
        for (int s = 0; s < kNeighborSlots; ++s) {
            const std::size_t b = g.slot_bond(i, s);
            neighbors_[kNeighborSlots * i + s] = static_cast<std::uint32_t>(g.neighbor(i, s));
            bonds_[kNeighborSlots * i + s] = static_cast<std::uint32_t>(b);
            weights_[kNeighborSlots * i + s] = static_cast<std::int8_t>(bond_weight(c, b));
        }
}

SiteUpdater::SiteUpdater(const ModelSpec& model)
    : SiteUpdater(model, build_heatbath_table(model.beta(), model.couplings().field()),
                  build_metropolis_table(model)) {}

SiteUpdater::SiteUpdater(const ModelSpec& model, HeatBathTable heatbath, MetropolisTable metropolis)
    : model_(model),
      stencil_(model),
      heatbath_(heatbath),
      heatbath_vacant_(build_heatbath_table(model.beta(), 0.0)),
      metropolis_(std::move(metropolis)),
      occupancy_(model.couplings().occupancies().begin(), model.couplings().occupancies().end()) {}

int SiteUpdater::local_bond_energy(std::size_t site, int value, const NeighborValues& nb) const noexcept {
    if (model_.kind() == ModelKind::IsingEA) return -value * neighbor_sum(site, nb);
    const auto& c = model_.couplings();
    const auto* w = stencil_.weights(site);
    const auto* b = stencil_.bonds(site);
    const int q = model_.q();
    int e = 0;
    for (int s = 0; s < kNeighborSlots; ++s) {
        const std::uint8_t* perm = c.has_permutations() ? c.permutation(b[s]).data() : nullptr;
        e += (s % 2 == 0) ? bond_energy(model_.kind(), q, w[s], perm, value, nb[s])
                          : bond_energy(model_.kind(), q, w[s], perm, nb[s], value);
    }
    return e;
}

std::int8_t SiteUpdater::metropolis(std::size_t site, std::int8_t current, const NeighborValues& nb,
                                    prng::PRWheel& rng) const noexcept {
    const std::uint32_t proposal_word = rng.next();
    std::int8_t proposal;
    if (model_.domain() == SpinDomain::Ising) {
        proposal = static_cast<std::int8_t>(-current);
    } else {
        const auto r = static_cast<int>(proposal_word % static_cast<std::uint32_t>(model_.q() - 1));
        proposal = static_cast<std::int8_t>(r < current ? r : r + 1);
    }

    const int bond_delta = local_bond_energy(site, proposal, nb) - local_bond_energy(site, current, nb);
    std::uint64_t threshold;
    if (metropolis_.on_the_fly()) {
        const FixedEnergy delta = bond_delta * kFixedOne - model_.couplings().field_fixed() *
                                                               occupancy_[site] * (proposal - current);
        threshold = metropolis_.threshold_real(static_cast<long double>(delta) / static_cast<long double>(kFixedOne));
    } else {
        threshold = metropolis_.threshold(bond_delta);
    }
    return rng.next() < threshold ? proposal : current;
}

}  // namespace janus
