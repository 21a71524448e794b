#pragma once

// Synchronous multi-spin coding on the plane-pipelined layout: x runs along
// the bits of a word, y indexes the words of a plane, z indexes planes. A
// whole (x, y) plane of one mixed replica is updated per pipeline step, from
// the same plane of the coupling stores and planes z-1, z, z+1 of the other
// mixed replica.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "engines/schedule.hpp"
#include "engines/tables.hpp"
#include "model/couplings.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

enum class PlaneLayout : std::uint8_t { Plain, MixedA, MixedB };

class BitPlaneStore {
public:
    static constexpr int kMaxSide = 64;

    explicit BitPlaneStore(int side, PlaneLayout layout = PlaneLayout::Plain);

    int side() const noexcept { return side_; }
    PlaneLayout layout() const noexcept { return layout_; }
    std::uint64_t row_mask() const noexcept {
        return side_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << side_) - 1);
    }

    /// The L words (rows y = 0..L-1) of plane z; L*L bits in total.
    std::span<std::uint64_t> plane(int z) noexcept { return {&words_[static_cast<std::size_t>(z) * side_], static_cast<std::size_t>(side_)}; }
    std::span<const std::uint64_t> plane(int z) const noexcept { return {&words_[static_cast<std::size_t>(z) * side_], static_cast<std::size_t>(side_)}; }

    bool bit(int x, int y, int z) const noexcept { return (words_[row(y, z)] >> x) & 1u; }
    void set_bit(int x, int y, int z, bool value) noexcept {
        const std::uint64_t m = std::uint64_t{1} << x;
        words_[row(y, z)] = value ? (words_[row(y, z)] | m) : (words_[row(y, z)] & ~m);
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const BitPlaneStore&, const BitPlaneStore&) = default;

private:
    std::size_t row(int y, int z) const noexcept { return static_cast<std::size_t>(z) * side_ + y; }

    int side_;
    PlaneLayout layout_;
    std::vector<std::uint64_t> words_;
};

/// Ising spins, bit set for +1. Throws DomainError for Potts spins or L > 64.
BitPlaneStore pack_planes(const SpinConfig& config, PlaneLayout layout = PlaneLayout::Plain);
SpinConfig unpack_planes(const BitPlaneStore& store);

/// Both endpoints of every bond keep a copy, one store per neighbor slot, so
/// plane z of these stores is all a plane-z update needs. `sign` bit set
/// means J = -1; `active` bit clear means the bond is removed by dilution.
struct CouplingPlanes {
    std::vector<BitPlaneStore> sign;
    std::vector<BitPlaneStore> active;
};

CouplingPlanes pack_coupling_planes(const CouplingSet& couplings);

struct MixedPlanes {
    BitPlaneStore a;
    BitPlaneStore b;
};

MixedPlanes pack_mixed(const MixedReplicaPair& pair);
MixedReplicaPair unpack_mixed(const MixedPlanes& planes, std::shared_ptr<const CouplingSet> couplings = nullptr);

/// One Metropolis sweep of the replica pair: every site of mixed store A
/// (black of replica 1, white of replica 2), then every site of B. Black
/// sites of replica 1 and white sites of replica 2 draw from `replica1` /
/// `replica2` at their color-set position, two words per site. The result
/// equals metropolis_sweep() on replica 1 black-first and on replica 2
/// white-first.
void smsc_metropolis_sweep(MixedPlanes& planes, const CouplingPlanes& couplings, const MetropolisTable& table,
                           const SweepSchedule& schedule, prng::StreamSet& replica1, prng::StreamSet& replica2);

}  // namespace janus
