#include "grid/domain_grid.hpp"

#include <atomic>
#include <barrier>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "common/error.hpp"

namespace janus {

std::string suggest_grids(int side) {
    std::string out;
    for (int g = 1; g <= side; ++g) {
        if (side % g != 0 || (side / g) % 2 != 0) continue;
        if (!out.empty()) out += ", ";
        out += std::to_string(g) + "x" + std::to_string(g);
    }
    return out.empty() ? "none (L must be even)" : out;
}

DomainGrid::DomainGrid(const LatticeGeometry& geometry, int gx, int gy) : geometry_(geometry), gx_(gx), gy_(gy) {
    const int l = geometry.side();
    const auto fits = [l](int g) { return g >= 1 && g <= l && l % g == 0 && (l / g) % 2 == 0; };
    if (!fits(gx) || !fits(gy))
        throw DomainError("cannot split L=" + std::to_string(l) + " into a " + std::to_string(gx) + "x" +
                          std::to_string(gy) + " grid: extents must divide L into even subdomain sides; try " +
                          suggest_grids(l));
    const int nx = l / gx;
    const int ny = l / gy;
    for (int b = 0; b < gy; ++b)
        for (int a = 0; a < gx; ++a) {
            subdomains_.push_back({a, b, a * nx, b * ny, nx, ny});
            cells_.emplace_back(static_cast<std::size_t>(nx + 2) * (ny + 2) * l, std::int8_t{0});
        }
}

DomainGrid partition_lattice(const LatticeGeometry& geometry, int gx, int gy) { return DomainGrid(geometry, gx, gy); }

std::size_t DomainGrid::worker_at(int a, int b) const noexcept {
    a = ((a % gx_) + gx_) % gx_;
    b = ((b % gy_) + gy_) % gy_;
    return static_cast<std::size_t>(b) * gx_ + a;
}

void DomainGrid::load(const SpinConfig& config) {
    if (!(config.geometry() == geometry_)) throw DomainError("grid load: configuration size differs");
    domain_ = config.domain();
    q_ = config.q();
    const int l = geometry_.side();
    for (std::size_t w = 0; w < subdomains_.size(); ++w) {
        const Subdomain& s = subdomains_[w];
        for (int z = 0; z < l; ++z)
            for (int ly = 0; ly < s.ny; ++ly)
                for (int lx = 0; lx < s.nx; ++lx)
                    cell(w, lx, ly, z) = config[geometry_.index({s.x0 + lx, s.y0 + ly, z})];
    }
    exchange_halos();
}

SpinConfig DomainGrid::gather() const {
    SpinConfig config(geometry_, domain_, q_);
    auto raw = config.raw();
    const int l = geometry_.side();
    for (std::size_t w = 0; w < subdomains_.size(); ++w) {
        const Subdomain& s = subdomains_[w];
        for (int z = 0; z < l; ++z)
            for (int ly = 0; ly < s.ny; ++ly)
                for (int lx = 0; lx < s.nx; ++lx)
                    raw[geometry_.index({s.x0 + lx, s.y0 + ly, z})] = local(w, lx, ly, z);
    }
    return config;
}

void DomainGrid::pull(std::size_t worker, int skip_parity) {
    const Subdomain& s = subdomains_[worker];
    const std::size_t west = worker_at(s.a - 1, s.b);
    const std::size_t east = worker_at(s.a + 1, s.b);
    const std::size_t south = worker_at(s.a, s.b - 1);
    const std::size_t north = worker_at(s.a, s.b + 1);
    const int l = geometry_.side();
    // Lattice side and subdomain sides are even, so local parity offsets match
    // global ones across the periodic wrap.
    const int base = (s.x0 + s.y0) & 1;
    const auto wanted = [&](int lx, int ly, int z) { return ((base + lx + ly + z) & 1) != skip_parity; };

    for (int z = 0; z < l; ++z) {
        for (int ly = 0; ly < s.ny; ++ly) {
            if (wanted(-1, ly, z)) cell(worker, -1, ly, z) = local(west, s.nx - 1, ly, z);
            if (wanted(s.nx, ly, z)) cell(worker, s.nx, ly, z) = local(east, 0, ly, z);
        }
        for (int lx = 0; lx < s.nx; ++lx) {
            if (wanted(lx, -1, z)) cell(worker, lx, -1, z) = local(south, lx, s.ny - 1, z);
            if (wanted(lx, s.ny, z)) cell(worker, lx, s.ny, z) = local(north, lx, 0, z);
        }
    }
}

void DomainGrid::exchange_halos() {
    for (std::size_t w = 0; w < subdomains_.size(); ++w) pull(w, -1);
}

void DomainGrid::pull_halos(std::size_t worker, Color color) { pull(worker, static_cast<int>(color)); }

void DomainGrid::update_color(std::size_t worker, const SiteUpdater& updater, const SweepSchedule& schedule,
                              prng::StreamSet& streams, UpdateRule rule, Color color) {
    const Subdomain& s = subdomains_[worker];
    const int l = geometry_.side();
    const int want = static_cast<int>(color);
    auto& cells = cells_[worker];
    const auto row = static_cast<std::ptrdiff_t>(s.nx + 2);
    const auto plane = row * (s.ny + 2);

    for (int z = 0; z < l; ++z) {
        // z is not split, so its neighbors wrap inside the slab.
        const std::ptrdiff_t up = (z + 1 == l ? -z : 1) * plane;
        const std::ptrdiff_t down = (z == 0 ? l - 1 : -1) * plane;
        for (int ly = 0; ly < s.ny; ++ly) {
            const int start = (want - (s.x0 + s.y0 + ly + z)) & 1;
            for (int lx = start; lx < s.nx; lx += 2) {
                const auto at = static_cast<std::ptrdiff_t>(offset(worker, lx, ly, z));
                const std::int8_t* c = cells.data() + at;
                const NeighborValues nb{c[1], c[-1], c[row], c[-row], c[up], c[down]};
                const std::size_t site = geometry_.index({s.x0 + lx, s.y0 + ly, z});
                auto& wheel = streams[schedule.position(site)];
                cells[at] = rule == UpdateRule::HeatBath ? updater.heatbath(site, nb, wheel)
                                                          : updater.metropolis(site, cells[at], nb, wheel);
            }
        }
    }
}

int grid_thread_count(std::size_t workers, int requested) {
    long limit = requested > 0 ? requested : static_cast<long>(workers);
    if (const char* env = std::getenv("JANUS_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0 && cap < limit) limit = cap;
    }
    if (limit > static_cast<long>(workers)) limit = static_cast<long>(workers);
    return static_cast<int>(limit < 1 ? 1 : limit);
}

void parallel_sweeps(DomainGrid& grid, const SiteUpdater& updater, const SweepSchedule& schedule,
                     prng::StreamSet& streams, UpdateRule rule, std::uint64_t sweeps, const GridOptions& options,
                     Color first) {
    const auto& g = grid.geometry();
    if (!(schedule.geometry() == g) || !(updater.model().geometry() == g))
        throw DomainError("grid sweep: grid, schedule and model sizes differ");
    if (streams.size() < schedule.half_size()) throw DomainError("grid sweep: not enough random streams");
    if (rule == UpdateRule::HeatBath && !updater.supports_heatbath())
        throw IncompatibleError("heat-bath engine requires an Ising model");
    if (sweeps == 0) return;

    const std::size_t workers = grid.worker_count();
    const int threads = grid_thread_count(workers, options.threads);
    const std::uint64_t phases = 2 * sweeps;

    std::barrier sync(threads);
    std::atomic<bool> abort{false};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::size_t failed_worker = 0;

    const auto body = [&](int thread) {
        for (std::uint64_t phase = 0; phase < phases; ++phase) {
            const Color color = phase % 2 == 0 ? first : other(first);
            std::size_t current = 0;
            try {
                for (std::size_t w = static_cast<std::size_t>(thread); w < workers; w += threads) {
                    current = w;
                    if (options.phase_hook) options.phase_hook(w, phase);
                    grid.pull_halos(w, color);
                    grid.update_color(w, updater, schedule, streams, rule, color);
                }
            } catch (...) {
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                        failed_worker = current;
                    }
                }
                abort.store(true);
                sync.arrive_and_drop();
                return;
            }
            sync.arrive_and_wait();
            if (abort.load()) {
                sync.arrive_and_drop();
                return;
            }
        }
    };

    if (threads == 1) {
        body(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(body, t);
    }

    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const std::exception& e) {
            throw std::runtime_error("grid worker " + std::to_string(failed_worker) + " failed: " + e.what());
        }
    }
}

}  // namespace janus
