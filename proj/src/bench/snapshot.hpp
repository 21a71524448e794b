#pragma once

// Snapshot text format:
//
//   janus-snap v1 <kind> <L> <q>
//   <L*L rows of L digits>
//
// Rows run over (z, y) with z outermost; the characters of a row are the
// sites x = 0..L-1 as base-q digits 0-9 then a-v. Ising spins are written
// as 0 for -1 and 1 for +1.

#include <iosfwd>

#include "model/lattice.hpp"

namespace janus {

struct Snapshot {
    ModelKind kind;
    SpinConfig config;
};

void write_snapshot(std::ostream& out, ModelKind kind, const SpinConfig& config);

/// Throws ParseError (with the line number) on any malformed or truncated input.
Snapshot read_snapshot(std::istream& in);

}  // namespace janus
