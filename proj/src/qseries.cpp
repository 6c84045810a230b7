#include "dentedhex/qseries.hpp"

#include "dentedhex/error.hpp"

namespace dentedhex {

LaurentPoly step_weight(std::int32_t label) {
    const Rational half(1, 2);
    return LaurentPoly::from_terms({{Monomial{label, 1, 0}, half}, {Monomial{-label, 0, 1}, half}});
}

LaurentPoly qpochhammer(const Monomial& base, const Monomial& ratio, std::int32_t n) {
    if (n < 0) throw InvalidArgument("q-Pochhammer length must be nonnegative");
    LaurentPoly result(1);
    Monomial shifted = base;
    for (std::int32_t j = 0; j < n; ++j) {
        result *= LaurentPoly(1) - LaurentPoly(shifted, 1);
        shifted = shifted * ratio;
    }
    return result;
}

LaurentPoly weight_run(std::int32_t lo, std::int32_t hi) {
    LaurentPoly result(1);
    for (std::int32_t i = lo; i <= hi; ++i) result *= step_weight(i);
    return result;
}

}  // namespace dentedhex
