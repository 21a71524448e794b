#include "bitslice/amsc.hpp"

#include <string>

#include "common/error.hpp"

namespace janus {

namespace {

constexpr std::uint64_t majority(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return (a & b) | (c & (a ^ b));
}

constexpr std::uint64_t all_if(bool flag) noexcept { return std::uint64_t{0} - static_cast<std::uint64_t>(flag); }

/// Lane-wise c ? b : a.
constexpr std::uint64_t select(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return (a & ~c) | (b & c);
}

}  // namespace

PackedEnsemble::PackedEnsemble(LatticeGeometry geometry, int lanes)
    : geometry_(geometry), lanes_(lanes), spins_(geometry.site_count(), 0) {
    if (lanes < 1 || lanes > kWordLanes)
        throw DomainError("lane count must lie in [1, 64], got " + std::to_string(lanes));
}

void PackedEnsemble::set_coupling_bits(std::vector<std::uint64_t> bits) {
    if (bits.size() != geometry_.bond_count()) throw DomainError("coupling bit vector has wrong length");
    couplings_ = std::move(bits);
}

PackedEnsemble pack(std::span<const SpinConfig> configs) {
    if (configs.empty()) throw DomainError("pack: need at least one configuration");
    if (configs.size() > static_cast<std::size_t>(kWordLanes))
        throw DomainError("pack: " + std::to_string(configs.size()) + " configurations exceed the 64-lane word");
    const auto& g = configs.front().geometry();
    PackedEnsemble ensemble(g, static_cast<int>(configs.size()));
    auto spins = ensemble.spins();
    for (std::size_t lane = 0; lane < configs.size(); ++lane) {
        const auto& c = configs[lane];
        if (!(c.geometry() == g)) throw DomainError("pack: configurations have different geometries");
        if (c.domain() != SpinDomain::Ising) throw DomainError("pack: multi-spin coding needs Ising spins");
        for (std::size_t i = 0; i < spins.size(); ++i)
            spins[i] |= static_cast<std::uint64_t>(c[i] > 0) << lane;
    }
    return ensemble;
}

PackedEnsemble pack(std::span<const SpinConfig> configs, std::span<const CouplingSet* const> couplings) {
    PackedEnsemble ensemble = pack(configs);
    if (couplings.size() != configs.size()) throw DomainError("pack: need one coupling set per lane");
    std::vector<std::uint64_t> bits(ensemble.geometry().bond_count(), 0);
    for (std::size_t lane = 0; lane < couplings.size(); ++lane) {
        const CouplingSet* c = couplings[lane];
        if (c == nullptr || !(c->geometry() == ensemble.geometry()))
            throw DomainError("pack: coupling set geometry differs");
        if (c->diluted()) throw IncompatibleError("pack: site-diluted couplings cannot be one-bit coded");
        for (std::size_t b = 0; b < bits.size(); ++b)
            bits[b] |= static_cast<std::uint64_t>(c->coupling(b) < 0) << lane;
    }
    ensemble.set_coupling_bits(std::move(bits));
    return ensemble;
}

std::vector<SpinConfig> unpack(const PackedEnsemble& ensemble) {
    std::vector<SpinConfig> out;
    out.reserve(ensemble.lanes());
    const auto spins = ensemble.spins();
    for (int lane = 0; lane < ensemble.lanes(); ++lane) {
        SpinConfig c(ensemble.geometry(), SpinDomain::Ising, 2);
        auto raw = c.raw();
        for (std::size_t i = 0; i < spins.size(); ++i) raw[i] = ((spins[i] >> lane) & 1u) ? 1 : -1;
        out.push_back(std::move(c));
    }
    return out;
}

AmscEngine::AmscEngine(const LatticeGeometry& geometry)
    : geometry_(geometry),
      neighbors_(kNeighborSlots * geometry.site_count()),
      bonds_(kNeighborSlots * geometry.site_count()) {
    for (std::size_t i = 0; i < geometry.site_count(); ++i)
        for (int s = 0; s < kNeighborSlots; ++s) {
            neighbors_[kNeighborSlots * i + s] = static_cast<std::uint32_t>(geometry.neighbor(i, s));
            bonds_[kNeighborSlots * i + s] = static_cast<std::uint32_t>(geometry.slot_bond(i, s));
        }
}

void AmscEngine::half_sweep(PackedEnsemble& ensemble, const HeatBathTable& table, const SweepSchedule& schedule,
                            prng::StreamSet& streams, Color color) const {
    if (!(ensemble.geometry() == geometry_) || !(schedule.geometry() == geometry_))
        throw DomainError("AMSC sweep: ensemble, schedule and engine geometries differ");
    if (!ensemble.has_couplings()) throw DomainError("AMSC sweep: ensemble has no packed couplings");
    if (streams.size() < schedule.half_size()) throw DomainError("AMSC sweep: not enough random streams");

    // Threshold per popcount v = number of bonds with J s_j = +1, nbs = 2v - 6.
    std::array<std::uint64_t, 7> thresholds{};
    for (int v = 0; v <= 6; ++v) thresholds[v] = table.threshold(2 * v - 6);

    auto spins = ensemble.spins();
    const auto j = ensemble.coupling_bits();
    const std::uint64_t mask = ensemble.lane_mask();
    const auto sites = schedule.sites(color);

    for (std::size_t p = 0; p < sites.size(); ++p) {
        const std::uint32_t site = sites[p];
        const std::uint32_t* nb = &neighbors_[kNeighborSlots * site];
        const std::uint32_t* bd = &bonds_[kNeighborSlots * site];

        const std::uint64_t t0 = spins[nb[0]] ^ j[bd[0]];
        const std::uint64_t t1 = spins[nb[1]] ^ j[bd[1]];
        const std::uint64_t t2 = spins[nb[2]] ^ j[bd[2]];
        const std::uint64_t t3 = spins[nb[3]] ^ j[bd[3]];
        const std::uint64_t t4 = spins[nb[4]] ^ j[bd[4]];
        const std::uint64_t t5 = spins[nb[5]] ^ j[bd[5]];

        const std::uint64_t s1 = t0 ^ t1 ^ t2;
        const std::uint64_t c1 = majority(t0, t1, t2);
        const std::uint64_t s2 = t3 ^ t4 ^ t5;
        const std::uint64_t c2 = majority(t3, t4, t5);
        const std::uint64_t bit0 = s1 ^ s2;
        const std::uint64_t k = s1 & s2;
        const std::uint64_t bit1 = c1 ^ c2 ^ k;
        const std::uint64_t bit2 = majority(c1, c2, k);

        const std::uint64_t word = streams[p].next();
        const std::uint64_t a0 = all_if(word < thresholds[0]);
        const std::uint64_t a1 = all_if(word < thresholds[1]);
        const std::uint64_t a2 = all_if(word < thresholds[2]);
        const std::uint64_t a3 = all_if(word < thresholds[3]);
        const std::uint64_t a4 = all_if(word < thresholds[4]);
        const std::uint64_t a5 = all_if(word < thresholds[5]);
        const std::uint64_t a6 = all_if(word < thresholds[6]);

        // Mux tree over (bit2, bit1, bit0); popcount 7 cannot occur.
        const std::uint64_t m01 = select(a0, a1, bit0);
        const std::uint64_t m23 = select(a2, a3, bit0);
        const std::uint64_t m45 = select(a4, a5, bit0);
        const std::uint64_t m67 = a6 & ~bit0;
        const std::uint64_t lo = select(m01, m23, bit1);
        const std::uint64_t hi = select(m45, m67, bit1);
        spins[site] = select(lo, hi, bit2) & mask;
    }
}

void amsc_heatbath_sweep(PackedEnsemble& ensemble, const HeatBathTable& table, const SweepSchedule& schedule,
                         prng::StreamSet& streams) {
    AmscEngine(ensemble.geometry()).sweep(ensemble, table, schedule, streams);
}

}  // namespace janus
