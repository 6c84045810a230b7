#include "dentedhex/paths.hpp"

#include <sstream>

#include "dentedhex/error.hpp"
#include "dentedhex/qseries.hpp"

namespace dentedhex {

namespace {

LaurentPoly one_minus_q(std::int32_t e) { return LaurentPoly(1) - LaurentPoly::q(e); }

LaurentPoly x_plus_y(std::int32_t x_q_exponent, std::int32_t y_q_exponent) {
    return LaurentPoly::from_terms({{Monomial{x_q_exponent, 1, 0}, 1}, {Monomial{y_q_exponent, 0, 1}, 1}});
}

// prod_{j=1}^{m} (1 - q^{2(shift+j)}) / (1 - q^{2j}), divided one factor at a
// time; each partial product is a Gaussian binomial in q^2 and so a polynomial.
LaurentPoly gaussian_ratio(std::int32_t shift, std::int32_t m) {
    LaurentPoly acc(1);
    for (std::int32_t j = 1; j <= m; ++j) {
        try {
            acc = exact_div(acc * one_minus_q(2 * shift + 2 * j), one_minus_q(2 * j));
        } catch (const NotDivisible&) {
            throw InternalNonDivisible("Gaussian binomial numerator not divisible");
        }
    }
    return acc;
}

}  // namespace

GridPoint LatticePath::end() const {
    GridPoint p = start;
    for (Step s : steps) {
        if (s == Step::Right) {
            ++p.a;
        } else {
            --p.b;
        }
    }
    return p;
}

std::vector<GridPoint> LatticePath::vertices() const {
    std::vector<GridPoint> out;
    out.reserve(steps.size() + 1);
    GridPoint p = start;
    out.push_back(p);
    for (Step s : steps) {
        if (s == Step::Right) {
            ++p.a;
        } else {
            --p.b;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<std::int32_t> LatticePath::right_labels() const {
    std::vector<std::int32_t> labels;
    GridPoint p = start;
    for (Step s : steps) {
        if (s == Step::Right) {
            labels.push_back(step_label(p));
            ++p.a;
        } else {
            --p.b;
        }
    }
    return labels;
}

LaurentPoly LatticePath::weight() const {
    LaurentPoly w(1);
    for (std::int32_t label : right_labels()) w *= step_weight(label);
    return w;
}

LaurentPoly gf_closed(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d) {
    if (a > c || b < d) return {};
    const std::int32_t m = c - a;
    LaurentPoly xy(1);
    for (std::int32_t j = 1; j <= m; ++j) xy *= x_plus_y(j - 1 - 2 * b + a, -j + 1 + 2 * d - a);
    return (gaussian_ratio(b - d, m) * xy).scaled(Rational(2).pow(-m));
}

LaurentPoly gf_recurrence(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d) {
    if (a > c || b < d) return {};
    const std::int32_t width = c - a + 1;
    const std::int32_t height = b - d + 1;
    // table[(col - a) * height + (row - d)] = gf(col, row, c, d)
    std::vector<LaurentPoly> table(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    auto at = [&](std::int32_t col, std::int32_t row) -> LaurentPoly& {
        return table[static_cast<std::size_t>(col - a) * static_cast<std::size_t>(height) +
                     static_cast<std::size_t>(row - d)];
    };
    for (std::int32_t col = c; col >= a; --col) {
        for (std::int32_t row = d; row <= b; ++row) {
            if (col == c) {
                at(col, row) = LaurentPoly(1);
            } else if (row == d) {
                at(col, row) = weight_run(col - 2 * d, c - 2 * d - 1);
            } else {
                at(col, row) = step_weight(col - 2 * row) * at(col + 1, row) + at(col, row - 1);
            }
        }
    }
    return at(a, b);
}

LaurentPoly gf_diag(std::int32_t a, std::int32_t c) {
    if (a < 0) throw InvalidArgument("gf_diag requires a >= 0");
    if (c < a) return {};
    const std::int32_t m = c - a;
    LaurentPoly xy(1);
    for (std::int32_t j = 1; j <= m; ++j) xy *= x_plus_y(j - 1, 1 - j);
    return (gaussian_ratio(a, m) * xy).shifted(q_power(-m * a)).scaled(Rational(2).pow(-m));
}

std::vector<WeightedPath> enumerate_paths(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d) {
    std::vector<WeightedPath> out;
    if (a > c || b < d) return out;
    const std::int32_t rights = c - a;
    const std::int32_t downs = b - d;
    if (rights + downs > kMaxEnumeratedPathLength) {
        throw TooLarge("path enumeration limited to " + std::to_string(kMaxEnumeratedPathLength) + " steps");
    }

    std::vector<Step> steps;
    std::vector<LaurentPoly> prefix_weights{LaurentPoly(1)};
    auto visit = [&](auto&& self, GridPoint p, std::int32_t rights_left, std::int32_t downs_left) -> void {
        if (rights_left == 0 && downs_left == 0) {
            out.push_back({LatticePath{{a, b}, steps}, prefix_weights.back()});
            return;
        }
        if (rights_left > 0) {
            steps.push_back(Step::Right);
            prefix_weights.push_back(prefix_weights.back() * step_weight(step_label(p)));
            self(self, GridPoint{p.a + 1, p.b}, rights_left - 1, downs_left);
            prefix_weights.pop_back();
            steps.pop_back();
        }
        if (downs_left > 0) {
            steps.push_back(Step::Down);
            prefix_weights.push_back(prefix_weights.back());
            self(self, GridPoint{p.a, p.b - 1}, rights_left, downs_left - 1);
            prefix_weights.pop_back();
            steps.pop_back();
        }
    };
    visit(visit, GridPoint{a, b}, rights, downs);
    return out;
}

ShiftFactor shift_factor(std::int32_t a, std::int32_t c, std::int32_t k) {
    if (a < 0 || c < a || k < 0) throw InvalidArgument("shift_factor requires 0 <= a <= c and k >= 0");
    ShiftFactor f{LaurentPoly(1), LaurentPoly::q(k * (c - a))};
    for (std::int32_t j = 1; j <= c - a; ++j) {
        f.numer *= one_minus_q(2 * a + 2 * k + 2 * j);
        f.denom *= one_minus_q(2 * a + 2 * j);
    }
    return f;
}

LaurentPoly PochhammerSymbol::expand() const { return qpochhammer(base, ratio, length); }

std::string PochhammerSymbol::to_string() const {
    auto monomial_text = [](const Monomial& m) { return m.q == 0 ? std::string("1") : "q^" + std::to_string(m.q); };
    return "(" + monomial_text(base) + ";" + monomial_text(ratio) + ")_" + std::to_string(length);
}

LaurentPoly PochhammerRatio::numer() const {
    LaurentPoly p = LaurentPoly::q(numer_q_power);
    for (const auto& f : numer_factors) p *= f.expand();
    return p;
}

LaurentPoly PochhammerRatio::denom() const {
    LaurentPoly p = LaurentPoly::q(denom_q_power);
    for (const auto& f : denom_factors) p *= f.expand();
    return p;
}

std::string PochhammerRatio::to_string() const {
    auto side = [](std::int32_t q_power, const std::vector<PochhammerSymbol>& factors) {
        std::ostringstream os;
        os << "q^" << q_power;
        for (const auto& f : factors) os << " * " << f.to_string();
        return os.str();
    };
    return "[" + side(numer_q_power, numer_factors) + "] / [" + side(denom_q_power, denom_factors) + "]";
}

PochhammerRatio shift_factor_pochhammer(std::int32_t a, std::int32_t c, std::int32_t k) {
    if (a < 0 || c < a || k < 0) throw InvalidArgument("shift_factor_pochhammer requires 0 <= a <= c and k >= 0");
    const Monomial q2 = q_power(2);
    const Monomial q2k = q_power(2 * k);
    PochhammerRatio r;
    r.numer_q_power = k * a;
    r.numer_factors = {{q2k, q2, c + 1}, {q2, q2, a}};
    r.denom_q_power = k * c;
    r.denom_factors = {{q2, q2, c}, {q2k, q2, a + 1}};
    return r;
}

}  // namespace dentedhex
