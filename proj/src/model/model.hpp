#pragma once

#include <memory>

#include "common/beta.hpp"
#include "model/couplings.hpp"
#include "model/lattice.hpp"

namespace janus {

/// Which Hamiltonian, at which temperature, on which quenched instance.
class ModelSpec {
public:
    ModelSpec(ModelKind kind, Beta beta, std::shared_ptr<const CouplingSet> couplings);

    ModelKind kind() const noexcept { return kind_; }
    Beta beta() const noexcept { return beta_; }
    int q() const noexcept { return couplings_->q(); }
    SpinDomain domain() const noexcept { return domain_of(kind_); }
    const CouplingSet& couplings() const noexcept { return *couplings_; }
    const std::shared_ptr<const CouplingSet>& couplings_ptr() const noexcept { return couplings_; }
    const LatticeGeometry& geometry() const noexcept { return couplings_->geometry(); }

    ModelSpec with_beta(Beta beta) const { return ModelSpec(kind_, beta, couplings_); }

    /// All bond terms are integers and there is no field.
    bool integer_spectrum() const noexcept { return couplings_->field_fixed() == 0; }

    /// A configuration of the right shape for this model.
    SpinConfig blank_config() const { return SpinConfig(geometry(), domain(), q()); }

    /// Throws DomainError if `config` has a different geometry or domain.
    void check_config(const SpinConfig& config) const;

private:
    ModelKind kind_;
    Beta beta_;
    std::shared_ptr<const CouplingSet> couplings_;
};

/// Convenience: generate couplings and wrap them.
ModelSpec make_model(ModelKind kind, int side, Beta beta, std::uint64_t coupling_seed,
                     const CouplingParams& params = {});

}  // namespace janus
