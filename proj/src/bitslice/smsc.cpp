#include "bitslice/smsc.hpp"

#include <string>

#include "common/error.hpp"
#include "model/energy.hpp"

namespace janus {

BitPlaneStore::BitPlaneStore(int side, PlaneLayout layout) : side_(side), layout_(layout) {
    if (side < 2 || side > kMaxSide)
        throw DomainError("bit-plane store needs 2 <= L <= 64, got " + std::to_string(side));
    words_.assign(static_cast<std::size_t>(side) * side, 0);
}

BitPlaneStore pack_planes(const SpinConfig& config, PlaneLayout layout) {
    if (config.domain() != SpinDomain::Ising) throw DomainError("bit-plane packing needs Ising spins");
    const auto& g = config.geometry();
    BitPlaneStore store(g.side(), layout);
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Coord c = g.coord(i);
        store.set_bit(c.x, c.y, c.z, config[i] > 0);
    }
    return store;
}

SpinConfig unpack_planes(const BitPlaneStore& store) {
    LatticeGeometry g(store.side());
    SpinConfig config(g, SpinDomain::Ising, 2);
    auto raw = config.raw();
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Coord c = g.coord(i);
        raw[i] = store.bit(c.x, c.y, c.z) ? 1 : -1;
    }
    return config;
}

CouplingPlanes pack_coupling_planes(const CouplingSet& couplings) {
    const auto& g = couplings.geometry();
    CouplingPlanes planes;
    for (int s = 0; s < kNeighborSlots; ++s) {
        planes.sign.emplace_back(g.side());
        planes.active.emplace_back(g.side());
    }
    for (std::size_t i = 0; i < g.site_count(); ++i) {
        const Coord c = g.coord(i);
        for (int s = 0; s < kNeighborSlots; ++s) {
            const std::size_t b = g.slot_bond(i, s);
            planes.sign[s].set_bit(c.x, c.y, c.z, couplings.coupling(b) < 0);
            planes.active[s].set_bit(c.x, c.y, c.z, bond_weight(couplings, b) != 0);
        }
    }
    return planes;
}

MixedPlanes pack_mixed(const MixedReplicaPair& pair) {
    return {pack_planes(pair.mixed_a, PlaneLayout::MixedA), pack_planes(pair.mixed_b, PlaneLayout::MixedB)};
}

MixedReplicaPair unpack_mixed(const MixedPlanes& planes, std::shared_ptr<const CouplingSet> couplings) {
    return {unpack_planes(planes.a), unpack_planes(planes.b), std::move(couplings)};
}

namespace {

constexpr std::uint64_t majority(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    return (a & b) | (c & (a ^ b));
}

struct BitCount {
    std::uint64_t b0, b1, b2;
    int lane(int x) const noexcept {
        return static_cast<int>(((b0 >> x) & 1u) | (((b1 >> x) & 1u) << 1) | (((b2 >> x) & 1u) << 2));
    }
};

BitCount count6(const std::array<std::uint64_t, kNeighborSlots>& t) noexcept {
    const std::uint64_t s1 = t[0] ^ t[1] ^ t[2];
    const std::uint64_t c1 = majority(t[0], t[1], t[2]);
    const std::uint64_t s2 = t[3] ^ t[4] ^ t[5];
    const std::uint64_t c2 = majority(t[3], t[4], t[5]);
    const std::uint64_t k = s1 & s2;
    return {s1 ^ s2, c1 ^ c2 ^ k, majority(c1, c2, k)};
}

/// Updates every site of `target` with neighbors read from `source`.
void update_store(BitPlaneStore& target, const BitPlaneStore& source, const CouplingPlanes& couplings,
                  const MetropolisTable& table, const SweepSchedule& schedule, prng::StreamSet& black_streams,
                  prng::StreamSet& white_streams) {
    const int side = target.side();
    const auto l = static_cast<std::size_t>(side);
    const std::uint64_t mask = target.row_mask();

    // Pipeline staging: neighbor planes z-1, z, z+1 and the deferred write-back.
    std::vector<std::uint64_t> below(source.plane(side - 1).begin(), source.plane(side - 1).end());
    std::vector<std::uint64_t> here(source.plane(0).begin(), source.plane(0).end());
    std::vector<std::uint64_t> above(l), pending(l), fresh(l);

    for (int z = 0; z < side; ++z) {
        const auto next = source.plane((z + 1) % side);
        std::copy(next.begin(), next.end(), above.begin());

        const auto current = target.plane(z);
        for (int y = 0; y < side; ++y) {
            const std::uint64_t row = current[y];
            const std::uint64_t mid = here[y];
            const std::array<std::uint64_t, kNeighborSlots> nb{
                (mid >> 1) | ((mid & 1u) << (side - 1)),       // +x
                ((mid << 1) | (mid >> (side - 1))) & mask,     // -x
                here[(y + 1) % side],                          // +y
                here[(y + side - 1) % side],                   // -y
                above[y],                                      // +z
                below[y],                                      // -z
            };
            std::array<std::uint64_t, kNeighborSlots> sat{}, unsat{};
            for (int s = 0; s < kNeighborSlots; ++s) {
                const std::uint64_t broken = row ^ nb[s] ^ couplings.sign[s].plane(z)[y];
                const std::uint64_t act = couplings.active[s].plane(z)[y];
                unsat[s] = broken & act;
                sat[s] = ~broken & act & mask;
            }
            const BitCount n_sat = count6(sat);
            const BitCount n_unsat = count6(unsat);

            std::uint64_t flips = 0;
            const std::size_t row_base = l * (static_cast<std::size_t>(y) + l * static_cast<std::size_t>(z));
            for (int x = 0; x < side; ++x) {
                const std::size_t site = row_base + static_cast<std::size_t>(x);
                auto& streams = ((x + y + z) & 1) == 0 ? black_streams : white_streams;
                auto& wheel = streams[schedule.position(site)];
                (void)wheel.next();  // proposal word; an Ising proposal is always the flip
                const int delta = 2 * (n_sat.lane(x) - n_unsat.lane(x));
                if (wheel.next() < table.threshold(delta)) flips |= std::uint64_t{1} << x;
            }
            fresh[y] = row ^ flips;
        }

        if (z > 0) std::copy(pending.begin(), pending.end(), target.plane(z - 1).begin());
        std::swap(pending, fresh);
        std::swap(below, here);
        std::swap(here, above);
    }
    std::copy(pending.begin(), pending.end(), target.plane(side - 1).begin());
}

}  // namespace

void smsc_metropolis_sweep(MixedPlanes& planes, const CouplingPlanes& couplings, const MetropolisTable& table,
                           const SweepSchedule& schedule, prng::StreamSet& replica1, prng::StreamSet& replica2) {
    if (planes.a.layout() != PlaneLayout::MixedA || planes.b.layout() != PlaneLayout::MixedB)
        throw DomainError("SMSC sweep needs the mixed-replica plane layout");
    const int side = planes.a.side();
    if (planes.b.side() != side || schedule.geometry().side() != side)
        throw DomainError("SMSC sweep: store and schedule sizes differ");
    if (couplings.sign.size() != kNeighborSlots || couplings.active.size() != kNeighborSlots ||
        couplings.sign.front().side() != side)
        throw DomainError("SMSC sweep: coupling planes do not match the lattice");
    if (table.on_the_fly()) throw IncompatibleError("SMSC sweep needs an integer Delta E spectrum (h = 0)");
    if (replica1.size() < schedule.half_size() || replica2.size() < schedule.half_size())
        throw DomainError("SMSC sweep: not enough random streams");

    update_store(planes.a, planes.b, couplings, table, schedule, replica1, replica2);
    update_store(planes.b, planes.a, couplings, table, schedule, replica2, replica1);
}

}  // namespace janus
