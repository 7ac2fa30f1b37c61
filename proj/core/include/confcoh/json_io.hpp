#pragma once

#include <cstdint>
#include <string>

#include "confcoh/bilinear.hpp"
#include "confcoh/graded_ring.hpp"

namespace confcoh {

/// Canonical JSON form of a presentation: generators with degrees, relations
/// as coefficient-exponent term lists in basis order, schema_version 1.
/// Byte-stable across runs.
std::string presentation_to_json(const Presentation& p);

/// Degree piece structure: {free_rank, torsion[]} or {f2_dimension}, plus
/// the monomial basis.
std::string piece_to_json(const GradedPiece& piece);

/// Structure of one degree as a short text form: "Z", "Z^2 (+) Z/4", "F2^3",
/// "0".
std::string structure_to_string(const GradedPiece& piece);

/// Coefficient tensor of a bilinear map (nonzero entries, exact rationals).
std::string bilinear_map_to_json(const BilinearMap& mu, const std::string& construction,
                                 std::uint64_t seed);

std::string nonsingularity_to_json(const BilinearMap& mu, const std::string& construction,
                                   const NonsingularitySearch& search, bool symmetric,
                                   bool bilinear_ok, std::size_t trials);

std::string embedding_report_to_json(const EmbeddingReport& report);

/// Writes content to path via a temporary file and rename (atomic on POSIX).
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace confcoh
