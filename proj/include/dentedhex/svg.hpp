#pragma once

#include <optional>
#include <string>

#include "dentedhex/tilings.hpp"

namespace dentedhex {

/// SVG 1.1 drawing of a region: unit triangles of side 40 px, dents filled
/// black, and when a tiling is given its lozenges coloured by kind with the
/// label written on each vertical lozenge.
std::string render_svg(const Region& r, const std::optional<Tiling>& tiling = std::nullopt);

}  // namespace dentedhex
