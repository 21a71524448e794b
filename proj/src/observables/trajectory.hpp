#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "model/model.hpp"

namespace janus {

struct Sample {
    std::uint64_t sweep = 0;
    double energy = 0.0;
    std::optional<double> magnetization;  ///< Ising only

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Time series of measurements plus the key/value metadata needed to replay
/// the run (model, seeds, engine, table checksums). Metadata keeps insertion
/// order so serialized output is deterministic.
class Trajectory {
public:
    /// Throws DomainError unless sweep indices strictly increase.
    void add(Sample sample);

    const std::vector<Sample>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }

    std::vector<double> energies() const;
    /// Throws DomainError if any sample lacks a magnetization.
    std::vector<double> magnetizations() const;

    void set_meta(const std::string& key, std::string value);
    const std::vector<std::pair<std::string, std::string>>& metadata() const noexcept { return meta_; }
    std::optional<std::string> meta(const std::string& key) const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
    std::vector<Sample> samples_;
    std::vector<std::pair<std::string, std::string>> meta_;
};

struct Measurement {
    double energy = 0.0;
    std::optional<double> magnetization;
};

/// Energy via total_energy; magnetization sum(s_i) / N for Ising models only.
Measurement measure(const ModelSpec& model, const SpinConfig& config);

}  // namespace janus
