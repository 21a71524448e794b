#include "model/energy.hpp"

#include <string>

#include "common/error.hpp"

namespace janus {

namespace {

const std::uint8_t* perm_ptr(const CouplingSet& c, std::size_t bond) noexcept {
    return c.has_permutations() ? c.permutation(bond).data() : nullptr;
}

void check_site(const ModelSpec& model, std::size_t site) {
    if (site >= model.geometry().site_count())
        throw DomainError("site index " + std::to_string(site) + " out of range");
}

}  // namespace

int bond_weight(const CouplingSet& couplings, std::size_t bond) noexcept {
    const std::size_t origin = bond / 3;
    const std::size_t target = couplings.geometry().neighbor(origin, 2 * static_cast<int>(bond % 3));
    return couplings.coupling(bond) * couplings.occupancy(origin) * couplings.occupancy(target);
}

FixedEnergy total_energy_fixed(const ModelSpec& model, const SpinConfig& config) {
    model.check_config(config);
    const auto& c = model.couplings();
    const auto& g = model.geometry();
    std::int64_t bonds = 0;
    for (std::size_t b = 0; b < g.bond_count(); ++b) {
        const std::size_t origin = b / 3;
        const std::size_t target = g.neighbor(origin, 2 * static_cast<int>(b % 3));
        bonds += bond_energy(model.kind(), model.q(), bond_weight(c, b), perm_ptr(c, b), config[origin], config[target]);
    }
    FixedEnergy e = bonds * kFixedOne;
    if (c.field_fixed() != 0) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < g.site_count(); ++i) sum += c.occupancy(i) * config[i];
        e -= c.field_fixed() * sum;
    }
    return e;
}

FixedEnergy local_energy_fixed(const ModelSpec& model, const SpinConfig& config, std::size_t site, int value) {
    model.check_config(config);
    check_site(model, site);
    if (!config.valid_value(value)) throw DomainError("spin value " + std::to_string(value) + " outside domain");
    const auto& c = model.couplings();
    const auto& g = model.geometry();
    std::int64_t bonds = 0;
    for (int slot = 0; slot < kNeighborSlots; ++slot) {
        const std::size_t nb = g.neighbor(site, slot);
        const std::size_t b = g.slot_bond(site, slot);
        const int w = bond_weight(c, b);
        bonds += (slot % 2 == 0) ? bond_energy(model.kind(), model.q(), w, perm_ptr(c, b), value, config[nb])
                                 : bond_energy(model.kind(), model.q(), w, perm_ptr(c, b), config[nb], value);
    }
    return bonds * kFixedOne - c.field_fixed() * c.occupancy(site) * value * (model.domain() == SpinDomain::Ising);
}

double total_energy(const ModelSpec& model, const SpinConfig& config) {
    return to_double(total_energy_fixed(model, config));
}

double local_energy(const ModelSpec& model, const SpinConfig& config, std::size_t site) {
    check_site(model, site);
    return to_double(local_energy_fixed(model, config, site, config[site]));
}

double local_energy_delta(const ModelSpec& model, const SpinConfig& config, std::size_t site, int new_value) {
    check_site(model, site);
    return to_double(local_energy_fixed(model, config, site, new_value) -
                     local_energy_fixed(model, config, site, config[site]));
}

double magnetization(const SpinConfig& config) {
    if (config.domain() != SpinDomain::Ising) throw DomainError("magnetization is defined for Ising spins only");
    std::int64_t sum = 0;
    for (auto v : config.values()) sum += v;
    return static_cast<double>(sum) / static_cast<double>(config.size());
}

}  // namespace janus
