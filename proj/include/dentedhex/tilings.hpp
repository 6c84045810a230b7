#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dentedhex/laurent_poly.hpp"
#include "dentedhex/lgv.hpp"
#include "dentedhex/paths.hpp"

namespace dentedhex {

enum class CellKind : std::uint8_t { Up, Down };

/// Unit triangle of a half hexagon. Row i (1 = top) holds up(i, j) for
/// j = 1..x+i and down(i, j) for j = 1..x+i-1, interleaved left to right as
/// up(i,1), down(i,1), up(i,2), ...
struct Cell {
    CellKind kind = CellKind::Up;
    std::int32_t row = 0;
    std::int32_t col = 0;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

/// Half hexagon with top side x, slant sides h and bottom side x + h, with
/// the extreme up-triangle removed from each left-dent row (up(i,1)) and each
/// right-dent row (up(i,x+i)).
class Region {
public:
    /// Throws InvalidArgument unless x >= 1, h >= 0, dent rows lie in 1..h
    /// without repeats, and |L| + |R| == h.
    Region(std::int32_t x, std::int32_t h, std::vector<std::int32_t> left_dents, std::vector<std::int32_t> right_dents);

    /// Parses "x=<int> h=<int> L=<list> R=<list>" where a list is
    /// comma-separated or "-" when empty.
    static Region parse(std::string_view spec);
    std::string to_string() const;

    std::int32_t x() const { return x_; }
    std::int32_t h() const { return h_; }
    const std::vector<std::int32_t>& left_dents() const { return left_; }
    const std::vector<std::int32_t>& right_dents() const { return right_; }

    bool is_left_dent(std::int32_t row) const;
    bool is_right_dent(std::int32_t row) const;
    /// Whether the triangle exists in the half hexagon (dented or not).
    bool in_hexagon(const Cell& c) const;
    bool is_dent(const Cell& c) const;
    /// In the half hexagon and not dented.
    bool contains(const Cell& c) const { return in_hexagon(c) && !is_dent(c); }

    /// Every non-dented cell in row-major scan order.
    std::vector<Cell> cells() const;

private:
    std::int32_t x_;
    std::int32_t h_;
    std::vector<std::int32_t> left_;
    std::vector<std::int32_t> right_;
};

enum class LozengeKind : std::uint8_t { Vertical, LeftTilted, RightTilted };

/// Vertical: up(i,j) + down(i+1,j). Right-tilted: up(i,j) + down(i,j).
/// Left-tilted: up(i,j) + down(i,j-1).
struct Lozenge {
    LozengeKind kind = LozengeKind::Vertical;
    Cell up;
    Cell down;

    static Lozenge from_up(LozengeKind kind, std::int32_t row, std::int32_t col);

    friend bool operator==(const Lozenge&, const Lozenge&) = default;
};

struct Tiling {
    std::vector<Lozenge> lozenges;

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// 2j - i - x - 1 for the vertical lozenge at up(i, j): twice the signed
/// offset of its centre from the symmetry axis. Throws InvalidArgument for a
/// tilted lozenge.
std::int32_t lozenge_label(const Region& r, const Lozenge& v);

/// Product of step_weight(label) over the vertical lozenges.
LaurentPoly tiling_weight(const Region& r, const Tiling& t);

inline constexpr std::size_t kDefaultMaxTilingCells = 200;

/// Streams every tiling to visit in a deterministic order: backtracking
/// always pairs the first uncovered cell in scan order. Throws TooLarge when
/// the region has more than max_cells non-dented cells.
void for_each_tiling(const Region& r, const std::function<void(const Tiling&)>& visit,
                     std::size_t max_cells = kDefaultMaxTilingCells);

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t max_cells = kDefaultMaxTilingCells);

/// The first tiling in enumeration order, if the region is tileable.
std::optional<Tiling> first_tiling(const Region& r, std::size_t max_cells = kDefaultMaxTilingCells);

/// Sum of tiling weights over all tilings.
LaurentPoly gf_tilings(const Region& r, std::size_t max_cells = kDefaultMaxTilingCells);

/// Starts x+l-1 for the rows l without a left dent and ends x+r-1 for the
/// right-dent rows r.
EndpointConfig region_endpoints(const Region& r);

/// Follows NE-oriented edges through the tiling from each undented left row:
/// a vertical lozenge is a Right step, a right-tilted lozenge a Down step.
/// Paths are returned in grid coordinates, sorted by start. Throws
/// InvalidTiling if a path leaves the region anywhere but a right dent.
std::vector<LatticePath> tiling_to_paths(const Region& r, const Tiling& t);

/// True when t pairs every non-dented cell of r exactly once with an
/// adjacent partner.
bool is_valid_tiling(const Region& r, const Tiling& t);

}  // namespace dentedhex
