#include "engines/tables.hpp"

#include <cmath>

#include "common/hash.hpp"

namespace janus {

std::uint64_t probability_threshold(long double p) noexcept {
    if (!(p > 0.0L)) return 0;
    if (p >= 1.0L) return kProbabilityOne;
    const long double scaled = std::ldexp(p, 32);
    const auto t = static_cast<std::uint64_t>(std::llround(scaled));
    return t > kProbabilityOne ? kProbabilityOne : t;
}

std::array<std::uint64_t, 7> HeatBathTable::canonical() const noexcept {
    std::array<std::uint64_t, 7> out{};
    for (int k = 0; k < 7; ++k) out[k] = threshold(2 * k - kMaxSum);
    return out;
}

std::uint64_t HeatBathTable::checksum() const noexcept { return fnv1a64_words(entries_); }

HeatBathTable build_heatbath_table(Beta beta, double local_field) {
    std::array<std::uint64_t, HeatBathTable::kEntries> entries{};
    for (int nbs = -HeatBathTable::kMaxSum; nbs <= HeatBathTable::kMaxSum; ++nbs) {
        const long double field = static_cast<long double>(nbs) + static_cast<long double>(local_field);
        std::uint64_t t;
        if (beta.is_infinite()) {
            t = field > 0 ? kProbabilityOne : field < 0 ? 0 : kProbabilityOne / 2;
        } else {
            const long double p = 1.0L / (1.0L + std::exp(-2.0L * static_cast<long double>(beta.value()) * field));
            t = probability_threshold(p);
        }
        entries[nbs + HeatBathTable::kMaxSum] = t;
    }
    return HeatBathTable(entries);
}

std::uint64_t metropolis_threshold(Beta beta, long double delta) noexcept {
    if (delta <= 0) return kProbabilityOne;
    if (beta.is_infinite()) return 0;
    return probability_threshold(std::exp(-static_cast<long double>(beta.value()) * delta));
}

MetropolisTable::MetropolisTable(Beta beta, std::vector<int> spectrum, bool on_the_fly)
    : beta_(beta), spectrum_(std::move(spectrum)), on_the_fly_(on_the_fly) {
    for (int d = 1; d <= kMaxDelta; ++d) entries_[d] = metropolis_threshold(beta, d);
    entries_[0] = kProbabilityOne;
}

std::uint64_t MetropolisTable::threshold_real(long double delta) const noexcept {
    return metropolis_threshold(beta_, delta);
}

std::uint64_t MetropolisTable::checksum() const noexcept {
    std::uint64_t h = fnv1a64_words(entries_);
    const std::uint64_t flag = on_the_fly_ ? 1 : 0;
    return fnv1a64_words(std::span<const std::uint64_t>(&flag, 1), h);
}

std::vector<int> positive_delta_spectrum(const ModelSpec& model) {
    const auto& c = model.couplings();
    const bool diluted = c.diluted();
    std::vector<int> out;
    switch (model.kind()) {
        case ModelKind::IsingEA:
            // dE = 2 s nbs; dilution makes odd nbs reachable.
            for (int d = 2; d <= 12; d += 2)
                if (diluted || d % 4 == 0) out.push_back(d);
            break;
        case ModelKind::Potts: {
            const int max = c.has_negative_couplings() ? 12 : 6;
            for (int d = 1; d <= max; ++d) out.push_back(d);
            break;
        }
        case ModelKind::GlassyPotts:
        case ModelKind::ChiralPotts:
        case ModelKind::GraphColoring:
            for (int d = 1; d <= 6; ++d) out.push_back(d);
            break;
    }
    return out;
}

MetropolisTable build_metropolis_table(const ModelSpec& model) {
    return MetropolisTable(model.beta(), positive_delta_spectrum(model), !model.integer_spectrum());
}

}  // namespace janus
