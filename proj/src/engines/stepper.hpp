#pragma once

#include <cstdint>
#include <memory>

#include "engines/run.hpp"

namespace janus {

/// One engine instance advancing whole sweeps; the run driver and the
/// benchmark harness share it.
class Stepper {
public:
    virtual ~Stepper() = default;
    virtual void advance(std::uint64_t sweeps) = 0;
    /// The tracked configuration (lane 0 for AMSC, replica 1 for SMSC).
    virtual SpinConfig current() const = 0;
    /// Systems updated per sweep: lanes for AMSC, 2 for SMSC, else 1.
    virtual int replicas() const noexcept { return 1; }
};

/// Validates with check_engine_compatibility() first.
std::unique_ptr<Stepper> make_stepper(const ModelSpec& model, const SpinConfig& start, const RunOptions& options);

}  // namespace janus
