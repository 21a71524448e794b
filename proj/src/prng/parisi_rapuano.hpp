#pragma once

// Parisi-Rapuano lagged-Fibonacci generator.
//
//   I(k) = I(k-24) + I(k-55)   (mod 2^32)
//   R(k) = I(k) ^ I(k-61)
//
// The wheel keeps the last 62 values of I. Seeding and stream forking are
// fully specified below so that any independent implementation reproduces
// the same words:
//
//   splitmix64_next(state): state += 0x9E3779B97F4A7C15, then the variant-13
//                           finalizer mix64() of the new state.
//   seed_wheel(seed):       state = seed; window[i] = high 32 bits of the i-th
//                           splitmix64 output, i = 0..61 (window[0] is the
//                           oldest value, I(-62)). If none of window[7..61] is
//                           odd, window[61] |= 1 so the additive part cannot
//                           collapse onto the even sublattice.
//   stream_seed(seed, i):   mix64(seed ^ mix64(i + 0x632BE59BD9B4E019))
//   fork_streams(seed, n):  stream i = seed_wheel(stream_seed(seed, i))

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace janus::prng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kStreamSalt = 0x632BE59BD9B4E019ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    state += kGolden;
    return mix64(state);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index + kStreamSalt));
}

/// Uniform integer in [0, bound) from a SplitMix64 state (Lemire's method,
/// unbiased). Used for coupling generation and initial configurations.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound);

class PRWheel {
public:
    static constexpr int kWindow = 62;
    static constexpr int kAddTapShort = 24;
    static constexpr int kAddTapLong = 55;
    static constexpr int kXorTap = 61;

    /// All-zero window: a fixed point that outputs 0 forever.
    PRWheel() = default;

    /// `window[0]` is the oldest value I(k-62), `window[61]` the newest I(k-1).
    explicit PRWheel(const std::array<std::uint32_t, kWindow>& window) : ring_(window) {}

    std::uint32_t next() noexcept {
        // pos_ holds I(k-62); every other lag is a fixed offset from it.
        const std::uint32_t p = pos_;
        const std::uint32_t fresh = ring_[wrap(p + (kWindow - kAddTapShort))] +
                                    ring_[wrap(p + (kWindow - kAddTapLong))];
        const std::uint32_t out = fresh ^ ring_[wrap(p + (kWindow - kXorTap))];
        ring_[p] = fresh;
        pos_ = (p + 1 == kWindow) ? 0 : p + 1;
        ++draws_;
        return out;
    }

    /// Current history, oldest first.
    std::array<std::uint32_t, kWindow> window() const noexcept;

    /// Number of words produced since construction.
    std::uint64_t draws() const noexcept { return draws_; }

    friend bool operator==(const PRWheel& a, const PRWheel& b) noexcept {
        return a.window() == b.window();
    }

private:
    static constexpr std::uint32_t wrap(std::uint32_t i) noexcept {
        return i >= kWindow ? i - kWindow : i;
    }

    std::array<std::uint32_t, kWindow> ring_{};
    std::uint32_t pos_ = 0;
    std::uint64_t draws_ = 0;
};

PRWheel seed_wheel(std::uint64_t seed);

/// One wheel per update cell; workers may own disjoint sub-spans.
class StreamSet {
public:
    StreamSet() = default;
    StreamSet(std::uint64_t seed, std::size_t count);

    std::size_t size() const noexcept { return wheels_.size(); }
    std::uint64_t seed() const noexcept { return seed_; }

    PRWheel& operator[](std::size_t i) noexcept { return wheels_[i]; }
    const PRWheel& operator[](std::size_t i) const noexcept { return wheels_[i]; }

    std::span<PRWheel> wheels() noexcept { return wheels_; }
    std::span<const PRWheel> wheels() const noexcept { return wheels_; }

    std::uint64_t total_draws() const noexcept;

    friend bool operator==(const StreamSet& a, const StreamSet& b) noexcept {
        return a.wheels_ == b.wheels_;
    }

private:
    std::uint64_t seed_ = 0;
    std::vector<PRWheel> wheels_;
};

/// Throws DomainError for n == 0.
StreamSet fork_streams(std::uint64_t seed, std::size_t n);

}  // namespace janus::prng
