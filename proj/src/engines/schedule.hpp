#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "model/couplings.hpp"
#include "model/lattice.hpp"

namespace janus {

enum class Color : std::uint8_t { Black = 0, White = 1 };

constexpr Color other(Color c) noexcept { return c == Color::Black ? Color::White : Color::Black; }

/// Checkerboard split of the lattice. Sites of one color are listed in
/// increasing site index (lexicographic z, y, x). `position(site)` is the rank
/// of a site inside its color set and doubles as its random-stream index.
class SweepSchedule {
public:
    explicit SweepSchedule(const LatticeGeometry& geometry);

    const LatticeGeometry& geometry() const noexcept { return geometry_; }
    std::span<const std::uint32_t> sites(Color c) const noexcept { return sets_[static_cast<int>(c)]; }
    std::size_t half_size() const noexcept { return sets_[0].size(); }

    Color color(std::size_t site) const noexcept { return static_cast<Color>(geometry_.parity(site)); }
    std::uint32_t position(std::size_t site) const noexcept { return position_[site]; }

private:
    LatticeGeometry geometry_;
    std::array<std::vector<std::uint32_t>, 2> sets_;
    std::vector<std::uint32_t> position_;
};

/// Throws DomainError for odd L, where parity coloring breaks across the
/// periodic boundary.
SweepSchedule checkerboard_partition(const LatticeGeometry& geometry);

/// Two replicas sharing couplings, stored as two artificial lattices:
/// `mixed_a` holds the black sites of replica 1 and the white sites of
/// replica 2, `mixed_b` the complement. Every neighbor of a site of one mixed
/// lattice lives in the other.
struct MixedReplicaPair {
    SpinConfig mixed_a;
    SpinConfig mixed_b;
    std::shared_ptr<const CouplingSet> couplings;
};

MixedReplicaPair mix_replicas(const SpinConfig& replica1, const SpinConfig& replica2, const SweepSchedule& schedule,
                              std::shared_ptr<const CouplingSet> couplings = nullptr);

std::pair<SpinConfig, SpinConfig> unmix_replicas(const MixedReplicaPair& pair, const SweepSchedule& schedule);

}  // namespace janus
