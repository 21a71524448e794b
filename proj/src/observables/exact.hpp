#pragma once

// Exact Boltzmann averages by enumerating every configuration. Only for
// desk-scale instances: q^N is capped at 2^24.

#include <cstdint>
#include <functional>
#include <vector>

#include "model/model.hpp"

namespace janus {

inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

/// q^N. Throws TooLargeError (with the size) above kMaxEnumeration.
std::uint64_t configuration_count(const ModelSpec& model);

/// Configuration number k: site i holds base-q digit i of k.
SpinConfig config_from_index(const ModelSpec& model, std::uint64_t k);
std::uint64_t index_of_config(const SpinConfig& config);

/// Energies of every configuration, in index order.
std::vector<double> enumerate_energies(const ModelSpec& model);

/// p_k = exp(-beta E_k) / Z, evaluated with log-sum-exp in long double. At
/// beta = inf the weight is spread evenly over the ground states.
struct ExactDistribution {
    std::vector<double> energies;
    std::vector<double> probabilities;
    long double log_z = 0;  ///< -inf-free only for finite beta
};

ExactDistribution exact_distribution(const ModelSpec& model);

/// log Z at the model's beta (finite only).
long double log_partition_function(const ModelSpec& model);

enum class Observable : std::uint8_t { Energy, EnergySquared, Magnetization, AbsMagnetization };

double exact_boltzmann_average(const ModelSpec& model, Observable observable);
double exact_boltzmann_average(const ModelSpec& model, const std::function<double(const SpinConfig&)>& observable);

/// -d log Z / d beta by a central difference with step `h`.
double energy_from_log_z(const ModelSpec& model, double h = 1e-4);

}  // namespace janus
