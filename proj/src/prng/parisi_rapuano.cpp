#include "prng/parisi_rapuano.hpp"

#include <numeric>

#include "common/error.hpp"

namespace janus::prng {

std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
    if (bound == 0) throw DomainError("bounded(): bound must be positive");
    // Lemire's nearly-divisionless rejection on 64x64 -> 128 bit products.
    std::uint64_t x = splitmix64_next(state);
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = splitmix64_next(state);
            m = static_cast<unsigned __int128>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::array<std::uint32_t, PRWheel::kWindow> PRWheel::window() const noexcept {
    std::array<std::uint32_t, kWindow> out{};
    for (int i = 0; i < kWindow; ++i) out[i] = ring_[wrap(pos_ + i)];
    return out;
}

PRWheel seed_wheel(std::uint64_t seed) {
    std::array<std::uint32_t, PRWheel::kWindow> window{};
    std::uint64_t state = seed;
    for (auto& w : window) w = static_cast<std::uint32_t>(splitmix64_next(state) >> 32);

    bool any_odd = false;
    for (int i = PRWheel::kWindow - PRWheel::kAddTapLong; i < PRWheel::kWindow; ++i)
        any_odd = any_odd || (window[i] & 1u);
    if (!any_odd) window[PRWheel::kWindow - 1] |= 1u;
    return PRWheel(window);
}

StreamSet::StreamSet(std::uint64_t seed, std::size_t count) : seed_(seed) {
    wheels_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) wheels_.push_back(seed_wheel(stream_seed(seed, i)));
}

std::uint64_t StreamSet::total_draws() const noexcept {
    return std::accumulate(wheels_.begin(), wheels_.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const PRWheel& w) { return acc + w.draws(); });
}

StreamSet fork_streams(std::uint64_t seed, std::size_t n) {
    if (n == 0) throw DomainError("fork_streams: stream count must be at least 1");
    return StreamSet(seed, n);
}

}  // namespace janus::prng
