#include "observables/trajectory.hpp"

#include <algorithm>

#include "common/error.hpp"
#include "model/energy.hpp"

namespace janus {

void Trajectory::add(Sample sample) {
    if (!samples_.empty() && sample.sweep <= samples_.back().sweep)
        throw DomainError("trajectory sweep indices must strictly increase (" + std::to_string(sample.sweep) +
                          " after " + std::to_string(samples_.back().sweep) + ")");
    samples_.push_back(sample);
}

std::vector<double> Trajectory::energies() const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) out.push_back(s.energy);
    return out;
}

std::vector<double> Trajectory::magnetizations() const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) {
        if (!s.magnetization) throw DomainError("trajectory has no magnetization samples");
        out.push_back(*s.magnetization);
    }
    return out;
}

void Trajectory::set_meta(const std::string& key, std::string value) {
    auto it = std::find_if(meta_.begin(), meta_.end(), [&](const auto& kv) { return kv.first == key; });
    if (it != meta_.end())
        it->second = std::move(value);
    else
        meta_.emplace_back(key, std::move(value));
}

std::optional<std::string> Trajectory::meta(const std::string& key) const {
    for (const auto& [k, v] : meta_)
        if (k == key) return v;
    return std::nullopt;
}

Measurement measure(const ModelSpec& model, const SpinConfig& config) {
    Measurement m;
    m.energy = total_energy(model, config);
    if (model.domain() == SpinDomain::Ising) m.magnetization = magnetization(config);
    return m;
}

}  // namespace janus
