#pragma once

// Asynchronous multi-spin coding: bit k of every word belongs to lane k, an
// independent replica with its own couplings. All lanes share the random
// word drawn for a site.

#include <cstdint>
#include <span>
#include <vector>

#include "engines/schedule.hpp"
#include "engines/tables.hpp"
#include "model/couplings.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

inline constexpr int kWordLanes = 64;

class PackedEnsemble {
public:
    PackedEnsemble(LatticeGeometry geometry, int lanes);

    const LatticeGeometry& geometry() const noexcept { return geometry_; }
    int lanes() const noexcept { return lanes_; }
    std::uint64_t lane_mask() const noexcept {
        return lanes_ == kWordLanes ? ~std::uint64_t{0} : ((std::uint64_t{1} << lanes_) - 1);
    }

    /// Per site; bit k set means lane k holds +1.
    std::span<std::uint64_t> spins() noexcept { return spins_; }
    std::span<const std::uint64_t> spins() const noexcept { return spins_; }

    /// Per bond; bit k set means J = -1 in lane k. Empty until couplings are packed.
    std::span<const std::uint64_t> coupling_bits() const noexcept { return couplings_; }
    bool has_couplings() const noexcept { return !couplings_.empty(); }
    void set_coupling_bits(std::vector<std::uint64_t> bits);

private:
    LatticeGeometry geometry_;
    int lanes_;
    std::vector<std::uint64_t> spins_;
    std::vector<std::uint64_t> couplings_;
};

/// Lane i of the result is configs[i]. Throws DomainError on mixed
/// geometries, non-Ising spins or more than 64 configurations.
PackedEnsemble pack(std::span<const SpinConfig> configs);

/// Also packs one coupling set per lane. Site-diluted sets are rejected: the
/// one-bit coupling encoding has no zero bond.
PackedEnsemble pack(std::span<const SpinConfig> configs, std::span<const CouplingSet* const> couplings);

std::vector<SpinConfig> unpack(const PackedEnsemble& ensemble);

/// Heat-bath over all lanes at once. Neighbor sums are formed with a
/// carry-save adder tree on packed words; the drawn word is compared once
/// against each of the seven table entries and each lane selects its
/// verdict by its bit-sliced sum.
class AmscEngine {
public:
    explicit AmscEngine(const LatticeGeometry& geometry);

    void half_sweep(PackedEnsemble& ensemble, const HeatBathTable& table, const SweepSchedule& schedule,
                    prng::StreamSet& streams, Color color) const;

    void sweep(PackedEnsemble& ensemble, const HeatBathTable& table, const SweepSchedule& schedule,
               prng::StreamSet& streams, Color first = Color::Black) const {
        half_sweep(ensemble, table, schedule, streams, first);
        half_sweep(ensemble, table, schedule, streams, other(first));
    }

private:
    LatticeGeometry geometry_;
    std::vector<std::uint32_t> neighbors_;
    std::vector<std::uint32_t> bonds_;
};

void amsc_heatbath_sweep(PackedEnsemble& ensemble, const HeatBathTable& table, const SweepSchedule& schedule,
                         prng::StreamSet& streams);

}  // namespace janus
