#include "model/model.hpp"

#include <string>

#include "common/error.hpp"

namespace janus {

ModelSpec::ModelSpec(ModelKind kind, Beta beta, std::shared_ptr<const CouplingSet> couplings)
    : kind_(kind), beta_(beta), couplings_(std::move(couplings)) {
    if (!couplings_) throw DomainError("model requires a coupling set");
    if (kind == ModelKind::IsingEA && couplings_->q() != 2) throw DomainError("Ising model requires q = 2");
    if (kind == ModelKind::GlassyPotts && !couplings_->has_permutations())
        throw DomainError("glassy Potts model requires per-bond permutations");
    if (kind != ModelKind::IsingEA && couplings_->field_fixed() != 0)
        throw DomainError("an external field is only defined for the Ising model");
    if (!has_coupling_signs(kind) && couplings_->has_negative_couplings())
        throw DomainError(std::string(to_string(kind)) + " has no coupling signs");
}

void ModelSpec::check_config(const SpinConfig& config) const {
    if (!(config.geometry() == geometry())) throw DomainError("configuration geometry differs from model geometry");
    if (config.domain() != domain() || config.q() != q())
        throw DomainError("configuration domain does not match model kind");
}

ModelSpec make_model(ModelKind kind, int side, Beta beta, std::uint64_t coupling_seed, const CouplingParams& params) {
    CouplingParams p = params;
    if (kind == ModelKind::IsingEA) p.q = 2;
    return ModelSpec(kind, beta,
                     std::make_shared<const CouplingSet>(generate_couplings(kind, LatticeGeometry(side), coupling_seed, p)));
}

}  // namespace janus
