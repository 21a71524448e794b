#include "model/lattice.hpp"

#include <string>

#include "common/error.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

LatticeGeometry::LatticeGeometry(int side) : side_(side), sites_(0) {
    if (side < 2) throw DomainError("lattice side must be at least 2, got " + std::to_string(side));
    if (side > 1024) throw DomainError("lattice side too large: " + std::to_string(side));
    sites_ = static_cast<std::size_t>(side) * side * side;
}

std::size_t LatticeGeometry::neighbor(std::size_t site, int slot) const noexcept {
    Coord c = coord(site);
    const int step = (slot % 2 == 0) ? 1 : -1;
    switch (slot / 2) {
        case 0: c.x = wrap(c.x + step); break;
        case 1: c.y = wrap(c.y + step); break;
        default: c.z = wrap(c.z + step); break;
    }
    return index(c);
}

std::array<std::size_t, kNeighborSlots> LatticeGeometry::neighbor_indices(std::size_t site) const {
    if (site >= sites_)
        throw DomainError("site index " + std::to_string(site) + " out of range (N = " +
                          std::to_string(sites_) + ")");
    std::array<std::size_t, kNeighborSlots> out{};
    for (int s = 0; s < kNeighborSlots; ++s) out[s] = neighbor(site, s);
    return out;
}

std::string_view to_string(ModelKind kind) noexcept {
    switch (kind) {
        case ModelKind::IsingEA: return "ising-ea";
        case ModelKind::Potts: return "potts";
        case ModelKind::GlassyPotts: return "glassy-potts";
        case ModelKind::ChiralPotts: return "chiral-potts";
        case ModelKind::GraphColoring: return "graph-coloring";
    }
    return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept {
    if (name == "ising-ea" || name == "ising") return ModelKind::IsingEA;
    if (name == "potts") return ModelKind::Potts;
    if (name == "glassy-potts") return ModelKind::GlassyPotts;
    if (name == "chiral-potts") return ModelKind::ChiralPotts;
    if (name == "graph-coloring") return ModelKind::GraphColoring;
    return std::nullopt;
}

SpinConfig::SpinConfig(LatticeGeometry geometry, SpinDomain domain, int q)
    : geometry_(geometry), domain_(domain), q_(q),
      values_(geometry.site_count(), domain == SpinDomain::Ising ? 1 : 0) {
    if (domain == SpinDomain::Ising && q != 2) throw DomainError("Ising configurations have q = 2");
    if (q < 2 || q > kMaxStates)
        throw DomainError("q must lie in [2, " + std::to_string(kMaxStates) + "], got " + std::to_string(q));
}

void SpinConfig::set(std::size_t site, int value) {
    if (site >= values_.size()) throw DomainError("site index out of range");
    if (!valid_value(value)) throw DomainError("spin value " + std::to_string(value) + " outside domain");
    values_[site] = static_cast<std::int8_t>(value);
}

void SpinConfig::set_digit(std::size_t site, int digit) {
    if (digit < 0 || digit >= q_) throw DomainError("digit " + std::to_string(digit) + " outside 0..q-1");
    set(site, domain_ == SpinDomain::Ising ? 2 * digit - 1 : digit);
}

SpinConfig random_config(const LatticeGeometry& geometry, SpinDomain domain, int q, std::uint64_t seed) {
    SpinConfig config(geometry, domain, q);
    std::uint64_t state = seed;
    auto raw = config.raw();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto digit = static_cast<int>(prng::bounded(state, static_cast<std::uint64_t>(q)));
        raw[i] = static_cast<std::int8_t>(domain == SpinDomain::Ising ? 2 * digit - 1 : digit);
    }
    return config;
}

SpinConfig flipped(const SpinConfig& config) {
    if (config.domain() != SpinDomain::Ising) throw DomainError("global flip is defined for Ising spins only");
    SpinConfig out = config;
    for (auto& v : out.raw()) v = static_cast<std::int8_t>(-v);
    return out;
}

}  // namespace janus
