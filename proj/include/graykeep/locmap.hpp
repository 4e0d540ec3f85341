#pragma once

#include "graykeep/bits.hpp"

namespace graykeep {

/// Per-unit skip flags (1 = the unit must stay untouched).
using LocationMap = BitVec;

/// Compresses a location map to a deterministic bit stream. The coder is an
/// adaptive binary arithmetic coder with 32-bit low/high registers and
/// Laplace counts starting at 1/1; a leading mode bit falls back to storing
/// the map raw whenever coding would expand it, so the output never exceeds
/// map.size() + 16 bits. The exact layout is part of the marked-image header
/// format (see README), so none of this is tunable.
BitVec compress_location_map(const LocationMap& map);

/// Inverse of compress_location_map for a map of n bits.
LocationMap decompress_location_map(const BitVec& stream, size_t n);

}  // namespace graykeep
