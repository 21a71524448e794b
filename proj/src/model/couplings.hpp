#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "model/lattice.hpp"

namespace janus {

/// Fixed-point scale for the external field: h is stored as round(h * 2^32).
inline constexpr int kFieldFractionBits = 32;
inline constexpr double kMaxFieldMagnitude = 64.0;

/// Quenched disorder for a 3D lattice instance: one +/-1 coupling per bond,
/// an optional permutation per bond (glassy Potts), a site occupancy mask and
/// a uniform field.
class CouplingSet {
public:
    /// Clean instance: J = +1 everywhere, all sites occupied, h = 0. When
    /// `with_permutations` is set every bond starts with the identity.
    CouplingSet(LatticeGeometry geometry, int q, bool with_permutations = false);

    const LatticeGeometry& geometry() const noexcept { return geometry_; }
    int q() const noexcept { return q_; }
    std::size_t bond_count() const noexcept { return signs_.size(); }

    std::int8_t coupling(std::size_t bond) const noexcept { return signs_[bond]; }
    void set_coupling(std::size_t bond, int value);
    std::span<const std::int8_t> couplings() const noexcept { return signs_; }

    bool has_permutations() const noexcept { return !perms_.empty(); }
    std::span<const std::uint8_t> permutation(std::size_t bond) const noexcept {
        return {perms_.data() + bond * static_cast<std::size_t>(q_), static_cast<std::size_t>(q_)};
    }
    /// Throws DomainError unless `perm` is a bijection on 0..q-1.
    void set_permutation(std::size_t bond, std::span<const std::uint8_t> perm);
    std::span<const std::uint8_t> permutations() const noexcept { return perms_; }

    std::uint8_t occupancy(std::size_t site) const noexcept { return occupancy_[site]; }
    void set_occupancy(std::size_t site, int value);
    std::span<const std::uint8_t> occupancies() const noexcept { return occupancy_; }
    bool diluted() const noexcept;

    /// Quantized field value.
    double field() const noexcept;
    std::int64_t field_fixed() const noexcept { return field_fixed_; }
    void set_field(double h);

    /// Any J = -1 present.
    bool has_negative_couplings() const noexcept;

    friend bool operator==(const CouplingSet&, const CouplingSet&) = default;

private:
    LatticeGeometry geometry_;
    int q_;
    std::vector<std::int8_t> signs_;
    std::vector<std::uint8_t> perms_;
    std::vector<std::uint8_t> occupancy_;
    std::int64_t field_fixed_ = 0;
};

/// FNV-1a over signs, permutations, occupancies and the fixed-point field.
std::uint64_t couplings_fingerprint(const CouplingSet& couplings) noexcept;

struct CouplingParams {
    int q = 2;
    double occupation = 1.0;   ///< probability that a site is occupied
    double field = 0.0;        ///< uniform h, Ising only
    bool ferromagnetic = false;  ///< all J = +1 instead of bimodal

    friend bool operator==(const CouplingParams&, const CouplingParams&) = default;
};

/// Deterministic in `seed`. Three independent SplitMix64 streams are used:
/// stream_seed(seed, 0) draws bond signs (top bit set -> J = -1),
/// stream_seed(seed, 1) draws Fisher-Yates permutations bond by bond,
/// stream_seed(seed, 2) draws occupancies (53-bit uniform < occupation).
CouplingSet generate_couplings(ModelKind kind, const LatticeGeometry& geometry, std::uint64_t seed,
                               const CouplingParams& params);

/// Text interchange format. Occupancy and field are not part of the format;
/// loading yields a fully occupied, zero-field instance.
void write_couplings(std::ostream& out, ModelKind kind, const CouplingSet& couplings, std::uint64_t seed);

struct CouplingFile {
    ModelKind kind;
    std::uint64_t seed;
    CouplingSet couplings;
};

/// Throws ParseError with the offending line number.
CouplingFile read_couplings(std::istream& in);

}  // namespace janus
