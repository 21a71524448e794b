#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace janus {

struct Coord {
    int x = 0;
    int y = 0;
    int z = 0;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// Neighbor slots in fixed order +x, -x, +y, -y, +z, -z. Even slots point
/// along a positive axis, so the bond for slot 2a is owned by the site itself
/// and the bond for slot 2a+1 by the neighbor.
inline constexpr int kNeighborSlots = 6;

/// Periodic 3D cubic lattice. Site index = x + L*(y + L*z), so increasing
/// index is lexicographic (z, y, x) order. Bond index = 3*site + axis, the
/// link from `site` toward +axis.
class LatticeGeometry {
public:
    static constexpr int kDimension = 3;

    explicit LatticeGeometry(int side);

    int side() const noexcept { return side_; }
    std::size_t site_count() const noexcept { return sites_; }
    std::size_t bond_count() const noexcept { return 3 * sites_; }

    std::size_t index(Coord c) const noexcept {
        return static_cast<std::size_t>(c.x) +
               static_cast<std::size_t>(side_) *
                   (static_cast<std::size_t>(c.y) + static_cast<std::size_t>(side_) * c.z);
    }
    std::size_t wrapped_index(int x, int y, int z) const noexcept {
        return index({wrap(x), wrap(y), wrap(z)});
    }
    Coord coord(std::size_t site) const noexcept {
        const auto l = static_cast<std::size_t>(side_);
        return {static_cast<int>(site % l), static_cast<int>((site / l) % l),
                static_cast<int>(site / (l * l))};
    }

    /// Throws DomainError when `site` is out of range.
    std::array<std::size_t, kNeighborSlots> neighbor_indices(std::size_t site) const;

    /// Unchecked single-slot variant.
    std::size_t neighbor(std::size_t site, int slot) const noexcept;

    static std::size_t bond_index(std::size_t site, Axis axis) noexcept {
        return 3 * site + static_cast<std::size_t>(axis);
    }
    /// Bond traversed when stepping from `site` through `slot`.
    std::size_t slot_bond(std::size_t site, int slot) const noexcept {
        const auto axis = static_cast<Axis>(slot / 2);
        return (slot % 2 == 0) ? bond_index(site, axis) : bond_index(neighbor(site, slot), axis);
    }

    /// Checkerboard color: parity of x+y+z (0 = black).
    int parity(std::size_t site) const noexcept {
        const Coord c = coord(site);
        return (c.x + c.y + c.z) & 1;
    }

    friend bool operator==(const LatticeGeometry&, const LatticeGeometry&) = default;

private:
    int wrap(int v) const noexcept { return ((v % side_) + side_) % side_; }

    int side_;
    std::size_t sites_;
};

enum class ModelKind : std::uint8_t { IsingEA, Potts, GlassyPotts, ChiralPotts, GraphColoring };

enum class SpinDomain : std::uint8_t { Ising, Potts };

inline constexpr int kMaxStates = 32;

std::string_view to_string(ModelKind kind) noexcept;
std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept;

constexpr SpinDomain domain_of(ModelKind kind) noexcept {
    return kind == ModelKind::IsingEA ? SpinDomain::Ising : SpinDomain::Potts;
}

/// Whether bond terms carry a +/-1 coupling sign (Eqs. for EA and disordered Potts).
constexpr bool has_coupling_signs(ModelKind kind) noexcept {
    return kind == ModelKind::IsingEA || kind == ModelKind::Potts;
}

/// Site variables: +/-1 for Ising, 0..q-1 for Potts.
class SpinConfig {
public:
    /// All +1 (Ising) or all 0 (Potts).
    SpinConfig(LatticeGeometry geometry, SpinDomain domain, int q);

    const LatticeGeometry& geometry() const noexcept { return geometry_; }
    SpinDomain domain() const noexcept { return domain_; }
    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return values_.size(); }

    std::int8_t operator[](std::size_t site) const noexcept { return values_[site]; }

    /// Validates the value against the domain.
    void set(std::size_t site, int value);

    bool valid_value(int value) const noexcept {
        return domain_ == SpinDomain::Ising ? (value == 1 || value == -1)
                                            : (value >= 0 && value < q_);
    }

    std::span<const std::int8_t> values() const noexcept { return values_; }
    /// Raw access for engines; callers keep values inside the domain.
    std::span<std::int8_t> raw() noexcept { return values_; }

    /// Index in 0..q-1 (Ising maps -1 -> 0, +1 -> 1).
    int digit(std::size_t site) const noexcept {
        return domain_ == SpinDomain::Ising ? (values_[site] + 1) / 2 : values_[site];
    }
    void set_digit(std::size_t site, int digit);

    friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

private:
    LatticeGeometry geometry_;
    SpinDomain domain_;
    int q_;
    std::vector<std::int8_t> values_;
};

/// Uniformly random configuration drawn from a SplitMix64 stream.
SpinConfig random_config(const LatticeGeometry& geometry, SpinDomain domain, int q, std::uint64_t seed);

/// Spin-flip (Ising) images; used by symmetry properties.
SpinConfig flipped(const SpinConfig& config);

}  // namespace janus
