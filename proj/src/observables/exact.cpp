#include "observables/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "common/error.hpp"
#include "model/energy.hpp"

namespace janus {

std::uint64_t configuration_count(const ModelSpec& model) {
    const auto q = static_cast<std::uint64_t>(model.q());
    const std::size_t n = model.geometry().site_count();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > kMaxEnumeration / q)
            throw TooLargeError("exact enumeration refused: q^N = " + std::to_string(q) + "^" + std::to_string(n) +
                                " configurations exceeds the 2^24 cap");
        count *= q;
    }
    return count;
}

SpinConfig config_from_index(const ModelSpec& model, std::uint64_t k) {
    SpinConfig config = model.blank_config();
    const auto q = static_cast<std::uint64_t>(model.q());
    for (std::size_t i = 0; i < config.size(); ++i) {
        config.set_digit(i, static_cast<int>(k % q));
        k /= q;
    }
    return config;
}

std::uint64_t index_of_config(const SpinConfig& config) {
    std::uint64_t k = 0;
    const auto q = static_cast<std::uint64_t>(config.q());
    for (std::size_t i = config.size(); i-- > 0;) k = k * q + static_cast<std::uint64_t>(config.digit(i));
    return k;
}

std::vector<double> enumerate_energies(const ModelSpec& model) {
    const std::uint64_t count = configuration_count(model);
    std::vector<double> energies(count);
    SpinConfig config = config_from_index(model, 0);
    const int q = model.q();
    // Odometer over base-q digits, site 0 fastest.
    for (std::uint64_t k = 0; k < count; ++k) {
        energies[k] = total_energy(model, config);
        for (std::size_t i = 0; i < config.size(); ++i) {
            const int d = config.digit(i) + 1;
            if (d < q) {
                config.set_digit(i, d);
                break;
            }
            config.set_digit(i, 0);
        }
    }
    return energies;
}

namespace {

/// Unnormalized log weights and their log-sum-exp.
std::pair<std::vector<long double>, long double> log_weights(const ModelSpec& model,
                                                              const std::vector<double>& energies) {
    std::vector<long double> logw(energies.size());
    if (model.beta().is_infinite()) {
        const double ground = *std::min_element(energies.begin(), energies.end());
        for (std::size_t k = 0; k < energies.size(); ++k)
            logw[k] = energies[k] == ground ? 0.0L : -std::numeric_limits<long double>::infinity();
    } else {
        const auto beta = static_cast<long double>(model.beta().value());
        for (std::size_t k = 0; k < energies.size(); ++k) logw[k] = -beta * static_cast<long double>(energies[k]);
    }
    const long double top = *std::max_element(logw.begin(), logw.end());
    long double sum = 0;
    for (long double w : logw) sum += std::exp(w - top);
    return {std::move(logw), top + std::log(sum)};
}

}  // namespace

ExactDistribution exact_distribution(const ModelSpec& model) {
    ExactDistribution d;
    d.energies = enumerate_energies(model);
    auto [logw, log_z] = log_weights(model, d.energies);
    d.log_z = log_z;
    d.probabilities.resize(logw.size());
    for (std::size_t k = 0; k < logw.size(); ++k) d.probabilities[k] = static_cast<double>(std::exp(logw[k] - log_z));
    return d;
}

long double log_partition_function(const ModelSpec& model) {
    if (model.beta().is_infinite()) throw DomainError("log Z diverges at beta = inf");
    return log_weights(model, enumerate_energies(model)).second;
}

double exact_boltzmann_average(const ModelSpec& model, const std::function<double(const SpinConfig&)>& observable) {
    const std::vector<double> energies = enumerate_energies(model);
    auto [logw, log_z] = log_weights(model, energies);
    long double acc = 0;
    for (std::uint64_t k = 0; k < energies.size(); ++k) {
        const long double p = std::exp(logw[k] - log_z);
        if (p == 0) continue;
        acc += p * static_cast<long double>(observable(config_from_index(model, k)));
    }
    return static_cast<double>(acc);
}

double exact_boltzmann_average(const ModelSpec& model, Observable observable) {
    if ((observable == Observable::Magnetization || observable == Observable::AbsMagnetization) &&
        model.domain() != SpinDomain::Ising)
        throw DomainError("magnetization is defined for Ising models only");
    switch (observable) {
        case Observable::Energy: {
            const std::vector<double> energies = enumerate_energies(model);
            auto [logw, log_z] = log_weights(model, energies);
            long double acc = 0;
            for (std::size_t k = 0; k < energies.size(); ++k)
                acc += std::exp(logw[k] - log_z) * static_cast<long double>(energies[k]);
            return static_cast<double>(acc);
        }
        case Observable::EnergySquared:
            return exact_boltzmann_average(model, [&](const SpinConfig& c) {
                const double e = total_energy(model, c);
                return e * e;
            });
        case Observable::Magnetization:
            return exact_boltzmann_average(model, [](const SpinConfig& c) { return magnetization(c); });
        case Observable::AbsMagnetization:
            return exact_boltzmann_average(model, [](const SpinConfig& c) { return std::abs(magnetization(c)); });
    }
    return 0.0;
}

double energy_from_log_z(const ModelSpec& model, double h) {
    const double beta = model.beta().value();
    if (!(h > 0) || beta - h < 0 || model.beta().is_infinite())
        throw DomainError("finite-difference step must be positive and keep beta non-negative");
    const long double up = log_partition_function(model.with_beta(Beta(beta + h)));
    const long double down = log_partition_function(model.with_beta(Beta(beta - h)));
    return static_cast<double>(-(up - down) / (2.0L * static_cast<long double>(h)));
}

}  // namespace janus
