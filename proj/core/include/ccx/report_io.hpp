#pragma once

#include <optional>
#include <string>

#include "ccx/invariants.hpp"
#include "ccx/zigzag_ring.hpp"

namespace ccx {

/// Stable machine-readable text document (versioned field names) followed by
/// the ASCII diamonds; byte-identical across runs for identical inputs.
std::string report_to_text(const InvariantReport& rep,
                           const std::optional<ZigzagSum>& zigzags = std::nullopt);

/// Same content as JSON.
std::string report_to_json(const InvariantReport& rep,
                           const std::optional<ZigzagSum>& zigzags = std::nullopt);

/// Centered diamond rendering of a bidegree table: antidiagonal rows, bottom
/// row (0,0), higher column degree to the left.
std::string diamond(const Table& t, const std::string& title);

/// Per-k diamonds of the refined Betti numbers.
std::string refined_diamonds(const InvariantReport& rep);

}  // namespace ccx
