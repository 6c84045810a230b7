#pragma once

#include <cstdint>

#include "dentedhex/laurent_poly.hpp"

namespace dentedhex {

/// w_i = (X q^i + Y q^-i) / 2, the weight of a vertical lozenge (or a
/// horizontal path step) carrying label i.
LaurentPoly step_weight(std::int32_t label);

/// (base; ratio)_n = prod_{j=0}^{n-1} (1 - base * ratio^j).
LaurentPoly qpochhammer(const Monomial& base, const Monomial& ratio, std::int32_t n);

/// prod_{i=lo}^{hi} w_i, which is 1 when hi < lo.
LaurentPoly weight_run(std::int32_t lo, std::int32_t hi);

/// Convenience: the monomial q^e.
constexpr Monomial q_power(std::int32_t e) { return Monomial{e, 0, 0}; }

}  // namespace dentedhex
