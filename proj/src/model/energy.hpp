#pragma once

#include <cstddef>
#include <cstdint>

#include "model/model.hpp"

namespace janus {

/// Energies in Q32.32 fixed point: bond terms are integers, the field term is
/// h (already quantized to 32 fractional bits) times an integer, so sums are
/// exact and engine-independent.
using FixedEnergy = std::int64_t;
inline constexpr FixedEnergy kFixedOne = FixedEnergy{1} << 32;

inline double to_double(FixedEnergy e) noexcept {
    return static_cast<double>(e) / static_cast<double>(kFixedOne);
}

/// Energy carried by one bond between `origin` and `target` = origin + e_axis.
/// `weight` is J * eps_origin * eps_target (J = +1 for kinds without signs).
inline int bond_energy(ModelKind kind, int q, int weight, const std::uint8_t* perm, int s_origin,
                       int s_target) noexcept {
    switch (kind) {
        case ModelKind::IsingEA: return -weight * s_origin * s_target;
        case ModelKind::Potts: return -weight * (s_origin == s_target);
        case ModelKind::GlassyPotts: return -weight * (s_origin == perm[s_target]);
        case ModelKind::ChiralPotts: return -weight * ((s_origin + 1) % q == s_target);
        case ModelKind::GraphColoring: return weight * (s_origin == s_target);
    }
    return 0;
}

/// Effective weight of `bond` (sign times both occupancies).
int bond_weight(const CouplingSet& couplings, std::size_t bond) noexcept;

FixedEnergy total_energy_fixed(const ModelSpec& model, const SpinConfig& config);

/// Local energy of `site` if it held `value`, all other sites as in `config`.
FixedEnergy local_energy_fixed(const ModelSpec& model, const SpinConfig& config, std::size_t site, int value);

/// Sum over the 3N bonds, each once, plus -h * sum(eps_i s_i) for Ising.
double total_energy(const ModelSpec& model, const SpinConfig& config);

/// -sum over the six incident bonds - h eps_i s_i.
double local_energy(const ModelSpec& model, const SpinConfig& config, std::size_t site);

/// E(new) - E(current) at `site`, without touching `config`.
double local_energy_delta(const ModelSpec& model, const SpinConfig& config, std::size_t site, int new_value);

/// Sum of s_i / N. Throws DomainError for Potts configurations.
double magnetization(const SpinConfig& config);

}  // namespace janus
