#include "dentedhex/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <unordered_map>

#include "dentedhex/error.hpp"
#include "dentedhex/poly_io.hpp"

namespace dentedhex {

namespace {

using Int128 = __int128;

mpz_class to_mpz(Int128 v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi, lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return negative ? mpz_class(-r) : r;
}

// Coefficients of p scaled by the lcm of their denominators.
struct IntegerImage {
    mpz_class denominator{1};
    std::vector<mpz_class> numerators;
    std::size_t max_bits = 0;
};

IntegerImage integer_image(const LaurentPoly& p) {
    IntegerImage img;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(img.denominator.get_mpz_t(), img.denominator.get_mpz_t(), c.den().get_mpz_t());
    }
    img.numerators.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        mpz_class n = c.num() * (img.denominator / c.den());
        img.max_bits = std::max(img.max_bits, mpz_sizeinbase(n.get_mpz_t(), 2));
        img.numerators.push_back(std::move(n));
    }
    return img;
}

struct Box {
    Monomial lo{std::numeric_limits<std::int32_t>::max(), std::numeric_limits<std::int32_t>::max(),
                std::numeric_limits<std::int32_t>::max()};
    Monomial hi{std::numeric_limits<std::int32_t>::min(), std::numeric_limits<std::int32_t>::min(),
                std::numeric_limits<std::int32_t>::min()};

    void include(const Monomial& m) {
        lo = {std::min(lo.q, m.q), std::min(lo.x, m.x), std::min(lo.y, m.y)};
        hi = {std::max(hi.q, m.q), std::max(hi.x, m.x), std::max(hi.y, m.y)};
    }
};

Box bounding_box(const LaurentPoly& p) {
    Box b;
    for (const auto& t : p.terms()) b.include(t.first);
    return b;
}

template <typename Acc>
LaurentPoly collect_sparse(std::unordered_map<Monomial, Acc, MonomialHash>& acc, const mpz_class& denominator) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, v] : acc) {
        mpz_class n;
        if constexpr (std::is_same_v<Acc, Int128>) {
            if (v == 0) continue;
            n = to_mpz(v);
        } else {
            if (sgn(v) == 0) continue;
            n = v;
        }
        terms.emplace_back(m, Rational(mpq_class(n, denominator)));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return LaurentPoly::from_terms(std::move(terms));
}

std::size_t bit_length(std::size_t v) {
    std::size_t bits = 0;
    while (v != 0) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    if (f.size() == 1) return g.shifted(f.leading_term().first).scaled(f.leading_term().second);
    if (g.size() == 1) return f.shifted(g.leading_term().first).scaled(g.leading_term().second);

    const IntegerImage fi = integer_image(f);
    const IntegerImage gi = integer_image(g);
    const mpz_class denominator = fi.denominator * gi.denominator;
    const auto& ft = f.terms();
    const auto& gt = g.terms();

    const bool fits_int128 = fi.max_bits <= 62 && gi.max_bits <= 62 &&
                             fi.max_bits + gi.max_bits + bit_length(std::min(ft.size(), gt.size())) <= 126;

    if (!fits_int128) {
        std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
        acc.reserve(ft.size() + gt.size());
        for (std::size_t i = 0; i < ft.size(); ++i) {
            for (std::size_t j = 0; j < gt.size(); ++j) {
                mpz_class& slot = acc[ft[i].first * gt[j].first];
                mpz_addmul(slot.get_mpz_t(), fi.numerators[i].get_mpz_t(), gi.numerators[j].get_mpz_t());
            }
        }
        return collect_sparse(acc, denominator);
    }

    std::vector<Int128> fs(ft.size()), gs(gt.size());
    for (std::size_t i = 0; i < ft.size(); ++i) fs[i] = mpz_get_si(fi.numerators[i].get_mpz_t());
    for (std::size_t j = 0; j < gt.size(); ++j) gs[j] = mpz_get_si(gi.numerators[j].get_mpz_t());

    const Box fb = bounding_box(f);
    const Box gb = bounding_box(g);
    const Monomial lo = fb.lo * gb.lo;
    const Monomial hi = fb.hi * gb.hi;
    const std::int64_t dq = std::int64_t{hi.q} - lo.q + 1;
    const std::int64_t dx = std::int64_t{hi.x} - lo.x + 1;
    const std::int64_t dy = std::int64_t{hi.y} - lo.y + 1;
    const long double volume = static_cast<long double>(dq) * dx * dy;
    const long double pairs = static_cast<long double>(ft.size()) * gt.size();

    if (volume <= (1 << 24) && volume <= std::max<long double>(4096.0L, 4.0L * pairs)) {
        // Dense accumulator indexed in canonical (y, x, q) order, so a linear
        // sweep yields sorted terms.
        std::vector<Int128> acc(static_cast<std::size_t>(volume), 0);
        auto index = [&](const Monomial& m) {
            return static_cast<std::size_t>(((m.y - lo.y) * dx + (m.x - lo.x)) * dq + (m.q - lo.q));
        };
        for (std::size_t i = 0; i < ft.size(); ++i) {
            for (std::size_t j = 0; j < gt.size(); ++j) {
                acc[index(ft[i].first * gt[j].first)] += fs[i] * gs[j];
            }
        }
        std::vector<LaurentPoly::Term> terms;
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (acc[k] == 0) continue;
            const auto kk = static_cast<std::int64_t>(k);
            const Monomial m{static_cast<std::int32_t>(kk % dq + lo.q), static_cast<std::int32_t>((kk / dq) % dx + lo.x),
                             static_cast<std::int32_t>(kk / (dq * dx) + lo.y)};
            terms.emplace_back(m, Rational(mpq_class(to_mpz(acc[k]), denominator)));
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

    std::unordered_map<Monomial, Int128, MonomialHash> acc;
    acc.reserve(ft.size() + gt.size());
    for (std::size_t i = 0; i < ft.size(); ++i) {
        for (std::size_t j = 0; j < gt.size(); ++j) acc[ft[i].first * gt[j].first] += fs[i] * gs[j];
    }
    return collect_sparse(acc, denominator);
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace_back(Monomial{}, constant);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& coefficient) {
    if (m.x < 0 || m.y < 0) throw InvalidArgument("negative X or Y exponent");
    if (!coefficient.is_zero()) terms_.emplace_back(m, coefficient);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.first.x < 0 || t.first.y < 0) throw InvalidArgument("negative X or Y exponent");
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second.is_one();
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : Rational(0);
}

bool LaurentPoly::is_xy_homogeneous(std::int32_t degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.xy_degree() == degree; });
}

bool LaurentPoly::is_q_only() const { return is_xy_homogeneous(0); }

LaurentPoly LaurentPoly::scaled(const Rational& factor) const {
    if (factor.is_zero()) return {};
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second *= factor;
    return p;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first = t.first * m;
    if (!p.terms_.empty() && (p.terms_.front().first.x < 0 || p.terms_.front().first.y < 0)) {
        for (const auto& t : p.terms_) {
            if (t.first.x < 0 || t.first.y < 0) throw InvalidArgument("negative X or Y exponent");
        }
    }
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::swap_xy_invert_q() const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) terms.emplace_back(Monomial{-m.q, m.y, m.x}, c);
    return from_terms(std::move(terms));
}

Rational LaurentPoly::evaluate(const Rational& q0, const Rational& x0, const Rational& y0) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        if (q0.is_zero() && m.q < 0) throw EvalAtZero();
        Rational value = c;
        if (m.q != 0) value *= q0.pow(m.q);
        if (m.x != 0) value *= x0.pow(m.x);
        if (m.y != 0) value *= y0.pow(m.y);
        sum += value;
    }
    return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = multiply(*this, rhs); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LaurentPoly r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        if (i->first < j->first) {
            r.terms_.push_back(*i++);
        } else if (j->first < i->first) {
            r.terms_.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!c.is_zero()) r.terms_.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), i, a.terms_.end());
    r.terms_.insert(r.terms_.end(), j, b.terms_.end());
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw DivisionByZero();
    if (dividend.is_zero()) return {};
    if (divisor.size() == 1) {
        const auto& [m, c] = divisor.leading_term();
        const Monomial inverse{-m.q, -m.x, -m.y};
        for (const auto& t : dividend.terms()) {
            if (t.first.x < m.x || t.first.y < m.y) throw NotDivisible();
        }
        return dividend.shifted(inverse).scaled(c.inverse());
    }

    // Newton polytopes add under multiplication, so the quotient's exponent
    // box is fixed by the boxes of dividend and divisor.
    const Box fb = bounding_box(dividend);
    const Box gb = bounding_box(divisor);
    const Monomial hlo = fb.lo / gb.lo;
    const Monomial hhi = fb.hi / gb.hi;
    if (hlo.q > hhi.q || hlo.x > hhi.x || hlo.y > hhi.y || hlo.x < 0 || hlo.y < 0) throw NotDivisible();
    const Monomial lower = dividend.trailing_term().first / divisor.trailing_term().first;
    const Monomial upper = dividend.leading_term().first / divisor.leading_term().first;

    // By Gauss's lemma the quotient of primitive integer polynomials is
    // integral, so the elimination runs over Z and every step must divide.
    IntegerImage fi = integer_image(dividend);
    IntegerImage gi = integer_image(divisor);
    mpz_class f_content = 0, g_content = 0;
    for (const auto& n : fi.numerators) mpz_gcd(f_content.get_mpz_t(), f_content.get_mpz_t(), n.get_mpz_t());
    for (const auto& n : gi.numerators) mpz_gcd(g_content.get_mpz_t(), g_content.get_mpz_t(), n.get_mpz_t());
    for (auto& n : fi.numerators) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), f_content.get_mpz_t());
    for (auto& n : gi.numerators) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g_content.get_mpz_t());
    const mpz_class& lead = gi.numerators.back();
    const auto& gt = divisor.terms();

    auto in_quotient_box = [&](const Monomial& m) {
        return m.q >= hlo.q && m.q <= hhi.q && m.x >= hlo.x && m.x <= hhi.x && m.y >= hlo.y && m.y <= hhi.y &&
               !(m < lower) && !(upper < m);
    };

    std::vector<LaurentPoly::Term> quotient;
    const mpq_class scale(mpq_class(f_content, g_content) * mpq_class(gi.denominator, fi.denominator));
    auto emit = [&](const Monomial& m, const mpz_class& c) {
        quotient.emplace_back(m, Rational(mpq_class(c) * scale));
    };

    const std::int64_t dq = std::int64_t{fb.hi.q} - fb.lo.q + 1;
    const std::int64_t dx = std::int64_t{fb.hi.x} - fb.lo.x + 1;
    const std::int64_t dy = std::int64_t{fb.hi.y} - fb.lo.y + 1;
    const long double volume = static_cast<long double>(dq) * dx * dy;
    mpz_class c, r;

    if (volume <= (1 << 22) && volume <= std::max<long double>(65536.0L, 64.0L * dividend.size())) {
        std::vector<mpz_class> rem(static_cast<std::size_t>(volume));
        auto index = [&](const Monomial& m) {
            return static_cast<std::int64_t>(((m.y - fb.lo.y) * dx + (m.x - fb.lo.x)) * dq + (m.q - fb.lo.q));
        };
        auto monomial_at = [&](std::int64_t k) {
            return Monomial{static_cast<std::int32_t>(k % dq + fb.lo.q), static_cast<std::int32_t>((k / dq) % dx + fb.lo.x),
                            static_cast<std::int32_t>(k / (dq * dx) + fb.lo.y)};
        };
        for (std::size_t i = 0; i < fi.numerators.size(); ++i) {
            rem[static_cast<std::size_t>(index(dividend.terms()[i].first))] = fi.numerators[i];
        }
        std::vector<std::int64_t> offsets(gt.size());
        for (std::size_t j = 0; j < gt.size(); ++j) {
            offsets[j] = index(Monomial{fb.lo.q, fb.lo.x, fb.lo.y} * gt[j].first) - index(fb.lo * gt.back().first);
        }
        for (std::int64_t k = static_cast<std::int64_t>(volume) - 1; k >= 0; --k) {
            mpz_class& top = rem[static_cast<std::size_t>(k)];
            if (sgn(top) == 0) continue;
            const Monomial m = monomial_at(k) / gt.back().first;
            if (!in_quotient_box(m)) throw NotDivisible();
            mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
            if (sgn(r) != 0) throw NotDivisible();
            for (std::size_t j = 0; j < gt.size(); ++j) {
                mpz_class& slot = rem[static_cast<std::size_t>(k + offsets[j])];
                mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), gi.numerators[j].get_mpz_t());
            }
            emit(m, c);
        }
    } else {
        std::map<Monomial, mpz_class> rem;
        for (std::size_t i = 0; i < fi.numerators.size(); ++i) rem.emplace(dividend.terms()[i].first, fi.numerators[i]);
        while (!rem.empty()) {
            const auto top = std::prev(rem.end());
            const Monomial m = top->first / gt.back().first;
            if (!in_quotient_box(m)) throw NotDivisible();
            mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top->second.get_mpz_t(), lead.get_mpz_t());
            if (sgn(r) != 0) throw NotDivisible();
            for (std::size_t j = 0; j < gt.size(); ++j) {
                auto [it, inserted] = rem.try_emplace(m * gt[j].first);
                mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), gi.numerators[j].get_mpz_t());
                if (sgn(it->second) == 0) rem.erase(it);
            }
            emit(m, c);
        }
    }
    std::reverse(quotient.begin(), quotient.end());
    return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly product(std::initializer_list<LaurentPoly> factors) {
    LaurentPoly result(1);
    for (const auto& f : factors) result *= f;
    return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << format(p); }

}  // namespace dentedhex
