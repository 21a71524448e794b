#pragma once

// Domain-decomposed engine over a virtual gx x gy torus of workers. Worker
// (a, b) owns the x,y slab [a L/gx, (a+1) L/gx) x [b L/gy, (b+1) L/gy) and
// every z, stored with a one-site halo on its four x,y faces.
//
// A half-sweep of color c is one bulk-synchronous phase: each worker pulls
// the opposite-color cells of its halo from its four neighbors, updates its
// own color-c sites, then waits at the barrier. Pulls read only cells of the
// color that nobody writes during the phase, so there are no torn reads and
// two barriers per sweep suffice. Sites draw from the global stream
// `schedule.position(site)`, which makes the result independent of the grid
// shape and bit-identical to the scalar engine.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "engines/schedule.hpp"
#include "engines/site_update.hpp"
#include "prng/parisi_rapuano.hpp"

namespace janus {

struct Subdomain {
    int a = 0;   ///< grid column
    int b = 0;   ///< grid row
    int x0 = 0;
    int y0 = 0;
    int nx = 0;
    int ny = 0;
};

enum class UpdateRule : std::uint8_t { HeatBath, Metropolis };

class DomainGrid {
public:
    /// Throws DomainError unless gx, gy >= 1 divide L and both subdomain sides
    /// are even; the message lists the grid extents that would work.
    DomainGrid(const LatticeGeometry& geometry, int gx, int gy);

    const LatticeGeometry& geometry() const noexcept { return geometry_; }
    int gx() const noexcept { return gx_; }
    int gy() const noexcept { return gy_; }
    std::size_t worker_count() const noexcept { return subdomains_.size(); }
    const Subdomain& subdomain(std::size_t worker) const noexcept { return subdomains_[worker]; }
    std::size_t worker_at(int a, int b) const noexcept;

    /// Scatters a configuration into the slabs and fills every halo.
    void load(const SpinConfig& config);
    /// Reassembles the owned sites (halos are ignored).
    SpinConfig gather() const;

    /// Value at local coordinates; lx in [-1, nx], ly in [-1, ny] reach the halo.
    std::int8_t local(std::size_t worker, int lx, int ly, int z) const noexcept {
        return cells_[worker][offset(worker, lx, ly, z)];
    }

    /// Full halo refresh from the neighbors' current boundary layers.
    void exchange_halos();

    /// Halo refresh restricted to cells of one color, as done at the start of
    /// every half-sweep.
    void pull_halos(std::size_t worker, Color color);

    /// Updates the owned sites of `color`.
    void update_color(std::size_t worker, const SiteUpdater& updater, const SweepSchedule& schedule,
                      prng::StreamSet& streams, UpdateRule rule, Color color);

private:
    std::size_t offset(std::size_t worker, int lx, int ly, int z) const noexcept {
        const Subdomain& s = subdomains_[worker];
        const auto w = static_cast<std::size_t>(s.nx + 2);
        const auto h = static_cast<std::size_t>(s.ny + 2);
        return (static_cast<std::size_t>(z) * h + static_cast<std::size_t>(ly + 1)) * w +
               static_cast<std::size_t>(lx + 1);
    }
    std::int8_t& cell(std::size_t worker, int lx, int ly, int z) noexcept {
        return cells_[worker][offset(worker, lx, ly, z)];
    }
    /// Copies neighbor boundary cells whose parity is not `skip_parity` (-1 copies all).
    void pull(std::size_t worker, int skip_parity);

    LatticeGeometry geometry_;
    int gx_;
    int gy_;
    SpinDomain domain_ = SpinDomain::Ising;
    int q_ = 2;
    std::vector<Subdomain> subdomains_;
    std::vector<std::vector<std::int8_t>> cells_;
};

/// Throws DomainError as described for DomainGrid.
DomainGrid partition_lattice(const LatticeGeometry& geometry, int gx, int gy);

/// "1x1, 2x2, ..." style list of grid extents usable for side L.
std::string suggest_grids(int side);

struct GridOptions {
    /// Worker threads; 0 means one per worker, capped by JANUS_THREADS.
    int threads = 0;
    /// Invoked by each worker at the start of every half-sweep. An exception
    /// thrown here (or by the update itself) aborts the run: the failing
    /// worker leaves the barrier, its peers stop at the next phase, and the
    /// first exception is rethrown to the caller wrapped with the worker id.
    std::function<void(std::size_t worker, std::uint64_t half_sweep)> phase_hook;
};

/// Thread count actually used for `workers` subdomains.
int grid_thread_count(std::size_t workers, int requested);

/// Runs `sweeps` full sweeps (first color, then the other) on the grid.
void parallel_sweeps(DomainGrid& grid, const SiteUpdater& updater, const SweepSchedule& schedule,
                     prng::StreamSet& streams, UpdateRule rule, std::uint64_t sweeps,
                     const GridOptions& options = {}, Color first = Color::Black);

inline void parallel_sweep(DomainGrid& grid, const SiteUpdater& updater, const SweepSchedule& schedule,
                           prng::StreamSet& streams, UpdateRule rule, const GridOptions& options = {}) {
    parallel_sweeps(grid, updater, schedule, streams, rule, 1, options);
}

}  // namespace janus
