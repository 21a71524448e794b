#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "common/beta.hpp"
#include "model/model.hpp"

namespace janus {

/// Probabilities are 33-bit integers on the scale 2^32; a uniform 32-bit word
/// w accepts iff w < threshold. P = 1 maps to 2^32, which every word beats.
inline constexpr std::uint64_t kProbabilityOne = std::uint64_t{1} << 32;

/// round(2^32 * p), clamped to [0, 2^32].
std::uint64_t probability_threshold(long double p) noexcept;

/// Heat-bath thresholds for P(s_i = +1 | nbs) = 1 / (1 + exp(-2 beta (nbs + h))).
///
/// Undiluted lattices only produce even neighbor sums, giving the classic
/// seven entries; site dilution zeroes bonds and makes odd sums reachable, so
/// the table spans every nbs in [-6, 6].
class HeatBathTable {
public:
    static constexpr int kMaxSum = 6;
    static constexpr int kEntries = 2 * kMaxSum + 1;

    HeatBathTable() = default;
    explicit HeatBathTable(const std::array<std::uint64_t, kEntries>& entries) : entries_(entries) {}

    std::uint64_t threshold(int nbs) const noexcept { return entries_[nbs + kMaxSum]; }
    void set_threshold(int nbs, std::uint64_t value) noexcept { entries_[nbs + kMaxSum] = value; }

    /// Entries for nbs = -6, -4, ..., 6.
    std::array<std::uint64_t, 7> canonical() const noexcept;
    const std::array<std::uint64_t, kEntries>& entries() const noexcept { return entries_; }

    std::uint64_t checksum() const noexcept;

    friend bool operator==(const HeatBathTable&, const HeatBathTable&) = default;

private:
    std::array<std::uint64_t, kEntries> entries_{};
};

HeatBathTable build_heatbath_table(Beta beta, double local_field);

/// Metropolis acceptance thresholds indexed by integer Delta E. Delta E <= 0
/// always accepts. When the model has a field the spectrum is not integer and
/// thresholds are evaluated per move from the same rounding rule.
class MetropolisTable {
public:
    static constexpr int kMaxDelta = 12;

    MetropolisTable() = default;
    MetropolisTable(Beta beta, std::vector<int> spectrum, bool on_the_fly);

    std::uint64_t threshold(int delta) const noexcept {
        return delta <= 0 ? kProbabilityOne : entries_[delta];
    }
    /// Real-valued Delta E, used on the on-the-fly path.
    std::uint64_t threshold_real(long double delta) const noexcept;

    void set_threshold(int delta, std::uint64_t value) noexcept { entries_[delta] = value; }

    bool on_the_fly() const noexcept { return on_the_fly_; }
    Beta beta() const noexcept { return beta_; }
    /// Reachable positive Delta E values.
    const std::vector<int>& spectrum() const noexcept { return spectrum_; }
    /// Number of stored positive entries.
    std::size_t size() const noexcept { return spectrum_.size(); }

    std::uint64_t checksum() const noexcept;

private:
    Beta beta_;
    std::vector<int> spectrum_;
    bool on_the_fly_ = false;
    std::array<std::uint64_t, kMaxDelta + 1> entries_{};
};

/// Positive Delta E values a single-site move can produce on the 3D lattice.
std::vector<int> positive_delta_spectrum(const ModelSpec& model);

MetropolisTable build_metropolis_table(const ModelSpec& model);

/// Metropolis threshold round(2^32 exp(-beta dE)) for dE > 0; shared by the
/// table builder, the on-the-fly path and the graph-coloring engine.
std::uint64_t metropolis_threshold(Beta beta, long double delta) noexcept;

}  // namespace janus
