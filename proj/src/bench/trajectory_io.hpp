#pragma once

#include <iosfwd>
#include <string>

#include "observables/trajectory.hpp"

namespace janus {

/// `sweep,energy,magnetization` with one row per sample; the magnetization
/// column is left empty for Potts-family models. Numbers use %.17g so the
/// file round-trips exactly.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

/// `key=value` lines in insertion order.
void write_trajectory_meta(std::ostream& out, const Trajectory& trajectory);

/// Writes `path` and `path.meta`. Throws IoError.
void save_trajectory(const std::string& path, const Trajectory& trajectory);

/// Inverse of write_trajectory_csv (metadata not included). Throws ParseError.
Trajectory read_trajectory_csv(std::istream& in);

}  // namespace janus
