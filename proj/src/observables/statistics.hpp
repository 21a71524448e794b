#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "observables/trajectory.hpp"

namespace janus {

struct BlockingLevel {
    std::size_t block_size = 1;
    std::size_t bins = 0;
    double error = 0.0;  ///< standard error of the mean from `bins` block means
};

/// Standard errors for block sizes 1, 2, 4, ... while at least 2 bins remain.
std::vector<BlockingLevel> blocking_levels(std::span<const double> series);

struct Estimate {
    double mean = 0.0;
    double error = 0.0;
    std::size_t samples = 0;
    std::size_t block_size = 1;  ///< block size the error was read from
};

/// Arithmetic mean with a blocking error bar. Block sizes double until the
/// error stops growing: the first level k whose successor satisfies
/// e[k+1] <= e[k] (1 + 1/sqrt(2 (n[k+1] - 1))), i.e. grows by less than the
/// statistical uncertainty of the error estimate itself. If no level
/// qualifies the largest error among levels with at least 16 bins is used.
/// Throws DomainError with fewer than 2 samples after burn-in.
Estimate mc_average(std::span<const double> series, std::size_t burnin = 0);
Estimate mc_average(const Trajectory& trajectory, std::size_t burnin = 0);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t degrees_of_freedom = 0;
    std::size_t bins = 0;  ///< after merging
    double p_value = 1.0;
};

/// Goodness of fit of observed counts against probabilities. Bins are merged
/// in increasing order of expected count until every merged bin expects at
/// least 5 events; a final short group joins the previous one. Throws
/// DomainError if fewer than two merged bins remain, the sizes differ or
/// the counts are empty.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts, std::span<const double> probabilities);

}  // namespace janus
