#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "engines/tables.hpp"
#include "model/energy.hpp"
#include "model/model.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

/// Per-site precomputed neighbor indices, bond indices and effective bond
/// weights (J * eps_i * eps_j), in slot order +x, -x, +y, -y, +z, -z.
class Stencil {
public:
    explicit Stencil(const ModelSpec& model);

    const std::uint32_t* neighbors(std::size_t site) const noexcept { return &neighbors_[kNeighborSlots * site]; }
    const std::uint32_t* bonds(std::size_t site) const noexcept { return &bonds_[kNeighborSlots * site]; }
    const std::int8_t* weights(std::size_t site) const noexcept { return &weights_[kNeighborSlots * site]; }

private:
    std::vector<std::uint32_t> neighbors_;
    std::vector<std::uint32_t> bonds_;
    std::vector<std::int8_t> weights_;
};

using NeighborValues = std::array<std::int8_t, kNeighborSlots>;

/// Single-site update rules shared by every engine that works on scalar
/// spins (scalar sweeps, the domain grid). Given the six neighbor values and
/// the site's own random wheel the result is fully determined, which is what
/// makes cross-engine bit-exactness possible.
///
/// Heat-bath draws one word: s = +1 iff word < HB(nbs).
/// Metropolis draws two words: the proposal word (uniform over the q-1 other
/// states via word mod (q-1) with the current value skipped; ignored for
/// Ising, where the proposal is the flip) and the acceptance word, accepted
/// iff word < threshold(dE).
class SiteUpdater {
public:
    explicit SiteUpdater(const ModelSpec& model);
    SiteUpdater(const ModelSpec& model, HeatBathTable heatbath, MetropolisTable metropolis);

    const ModelSpec& model() const noexcept { return model_; }
    const Stencil& stencil() const noexcept { return stencil_; }
    const HeatBathTable& heatbath_table() const noexcept { return heatbath_; }
    const HeatBathTable& vacant_heatbath_table() const noexcept { return heatbath_vacant_; }
    const MetropolisTable& metropolis_table() const noexcept { return metropolis_; }

    bool supports_heatbath() const noexcept { return model_.domain() == SpinDomain::Ising; }

    NeighborValues gather(std::span<const std::int8_t> values, std::size_t site) const noexcept {
        const auto* nb = stencil_.neighbors(site);
        NeighborValues out;
        for (int s = 0; s < kNeighborSlots; ++s) out[s] = values[nb[s]];
        return out;
    }

    int neighbor_sum(std::size_t site, const NeighborValues& nb) const noexcept {
        const auto* w = stencil_.weights(site);
        int sum = 0;
        for (int s = 0; s < kNeighborSlots; ++s) sum += w[s] * nb[s];
        return sum;
    }

    std::int8_t heatbath(std::size_t site, const NeighborValues& nb, prng::PRWheel& rng) const noexcept {
        const int nbs = neighbor_sum(site, nb);
        const auto& table = occupancy_[site] ? heatbath_ : heatbath_vacant_;
        return rng.next() < table.threshold(nbs) ? std::int8_t{1} : std::int8_t{-1};
    }

    std::int8_t metropolis(std::size_t site, std::int8_t current, const NeighborValues& nb,
                           prng::PRWheel& rng) const noexcept;

    /// Integer bond part of the local energy for `value`.
    int local_bond_energy(std::size_t site, int value, const NeighborValues& nb) const noexcept;

private:
    ModelSpec model_;
    Stencil stencil_;
    HeatBathTable heatbath_;
    HeatBathTable heatbath_vacant_;
    MetropolisTable metropolis_;
    std::vector<std::uint8_t> occupancy_;
};

}  // namespace janus
