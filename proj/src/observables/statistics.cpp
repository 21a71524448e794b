#include "observables/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "common/error.hpp"

namespace janus {

namespace {

constexpr std::size_t kMinBins = 16;

double standard_error(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace

std::vector<BlockingLevel> blocking_levels(std::span<const double> series) {
    std::vector<BlockingLevel> levels;
    std::vector<double> blocks(series.begin(), series.end());
    std::size_t size = 1;
    while (blocks.size() >= 2) {
        levels.push_back({size, blocks.size(), standard_error(blocks)});
        std::vector<double> next(blocks.size() / 2);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = 0.5 * (blocks[2 * i] + blocks[2 * i + 1]);
        blocks = std::move(next);
        size *= 2;
    }
    return levels;
}

Estimate mc_average(std::span<const double> series, std::size_t burnin) {
    if (series.size() < burnin + 2)
        throw DomainError("mc_average needs at least 2 samples after burn-in, have " +
                          std::to_string(series.size() > burnin ? series.size() - burnin : 0));
    const auto data = series.subspan(burnin);
    Estimate est;
    est.samples = data.size();
    est.mean = std::accumulate(data.begin(), data.end(), 0.0) / static_cast<double>(data.size());

    const auto levels = blocking_levels(data);
    est.error = levels.front().error;
    est.block_size = 1;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        const BlockingLevel& here = levels[k];
        const BlockingLevel& next = levels[k + 1];
        if (next.bins < kMinBins) break;
        const double tolerance = 1.0 / std::sqrt(2.0 * (static_cast<double>(next.bins) - 1.0));
        if (next.error <= here.error * (1.0 + tolerance)) {
            est.error = here.error;
            est.block_size = here.block_size;
            return est;
        }
    }
    // No plateau: take the most pessimistic trustworthy level.
    for (const BlockingLevel& level : levels)
        if (level.bins >= kMinBins && level.error > est.error) {
            est.error = level.error;
            est.block_size = level.block_size;
        }
    return est;
}

Estimate mc_average(const Trajectory& trajectory, std::size_t burnin) {
    const std::vector<double> energies = trajectory.energies();
    return mc_average(energies, burnin);
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts, std::span<const double> probabilities) {
    if (counts.size() != probabilities.size()) throw DomainError("chi-square: counts and probabilities differ in length");
    const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
    if (total <= 0) throw DomainError("chi-square: no observations");

    std::vector<std::size_t> order(counts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return probabilities[a] < probabilities[b]; });

    std::vector<std::pair<double, double>> groups;  // (observed, expected)
    double observed = 0.0;
    double expected = 0.0;
    for (std::size_t i : order) {
        if (!(probabilities[i] >= 0.0)) throw DomainError("chi-square: negative or NaN probability");
        observed += static_cast<double>(counts[i]);
        expected += probabilities[i] * total;
        if (expected >= 5.0) {
            groups.emplace_back(observed, expected);
            observed = expected = 0.0;
        }
    }
    if (expected > 0.0 || observed > 0.0) {
        if (groups.empty()) throw DomainError("chi-square: degenerate binning (total expected count below 5)");
        groups.back().first += observed;
        groups.back().second += expected;
    }
    if (groups.size() < 2) throw DomainError("chi-square: degenerate binning (fewer than two bins after merging)");

    ChiSquareResult r;
    for (auto [o, e] : groups) r.statistic += (o - e) * (o - e) / e;
    r.bins = groups.size();
    r.degrees_of_freedom = groups.size() - 1;
    const boost::math::chi_squared dist(static_cast<double>(r.degrees_of_freedom));
    r.p_value = r.statistic <= 0.0 ? 1.0 : boost::math::cdf(boost::math::complement(dist, r.statistic));
    return r;
}

}  // namespace janus
