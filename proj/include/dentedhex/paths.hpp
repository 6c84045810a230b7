#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dentedhex/laurent_poly.hpp"

namespace dentedhex {

/// A point (column a, row b) of Z x Z.
struct GridPoint {
    std::int32_t a = 0;
    std::int32_t b = 0;

    friend constexpr bool operator==(const GridPoint&, const GridPoint&) = default;
    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class Step : std::uint8_t { Right, Down };

/// Monotone path: Right sends (a,b) to (a+1,b), Down sends (a,b) to (a,b-1).
struct LatticePath {
    GridPoint start;
    std::vector<Step> steps;

    GridPoint end() const;
    /// Every visited point, start and end included.
    std::vector<GridPoint> vertices() const;
    /// step_label of each Right step, in path order.
    std::vector<std::int32_t> right_labels() const;
    /// Product of step weights over the Right steps.
    LaurentPoly weight() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Label of the Right step leaving p: a - 2b.
constexpr std::int32_t step_label(const GridPoint& p) { return p.a - 2 * p.b; }

/// Generating function of all monotone paths (a,b) -> (c,d) from the
/// closed product formula. Zero when a > c or b < d.
LaurentPoly gf_closed(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d);

/// Same generating function from the three-case recursion, evaluated by
/// dynamic programming over (a, b) with (c, d) fixed.
LaurentPoly gf_recurrence(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d);

/// Paths from the diagonal point (a,a) to the axis point (c,0). Requires a >= 0.
LaurentPoly gf_diag(std::int32_t a, std::int32_t c);

struct WeightedPath {
    LatticePath path;
    LaurentPoly weight;
};

inline constexpr std::int32_t kMaxEnumeratedPathLength = 26;

/// All monotone paths (a,b) -> (c,d) with their weights, in lexicographic
/// step order (Right before Down). Throws TooLarge past
/// kMaxEnumeratedPathLength steps.
std::vector<WeightedPath> enumerate_paths(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d);

/// gf_diag(a+k, c+k) * denom == gf_diag(a, c) * numer.
struct ShiftFactor {
    LaurentPoly numer;
    LaurentPoly denom;
};

ShiftFactor shift_factor(std::int32_t a, std::int32_t c, std::int32_t k);

/// (base; ratio)_length kept symbolic.
struct PochhammerSymbol {
    Monomial base;
    Monomial ratio;
    std::int32_t length = 0;

    LaurentPoly expand() const;
    std::string to_string() const;
};

/// q^numer_q_power * prod(numer_factors) / (q^denom_q_power * prod(denom_factors)).
struct PochhammerRatio {
    std::int32_t numer_q_power = 0;
    std::vector<PochhammerSymbol> numer_factors;
    std::int32_t denom_q_power = 0;
    std::vector<PochhammerSymbol> denom_factors;

    LaurentPoly numer() const;
    LaurentPoly denom() const;
    std::string to_string() const;
};

/// The shift factor written with q-Pochhammer symbols:
/// (q^2k;q^2)_{c+1} q^{ka} (q^2;q^2)_a / (q^{kc} (q^2;q^2)_c (q^2k;q^2)_{a+1}).
PochhammerRatio shift_factor_pochhammer(std::int32_t a, std::int32_t c, std::int32_t k);

}  // namespace dentedhex
