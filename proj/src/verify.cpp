#include "dentedhex/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "dentedhex/determinant.hpp"
#include "dentedhex/error.hpp"
#include "dentedhex/lgv.hpp"
#include "dentedhex/paths.hpp"
#include "dentedhex/poly_io.hpp"
#include "dentedhex/qseries.hpp"
#include "dentedhex/tilings.hpp"

namespace dentedhex {

namespace {

class Checker {
public:
    explicit Checker(std::string suite) { report_.suite = std::move(suite); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++report_.cases;
        if (ok) return;
        if (report_.failures++ == 0) report_.counterexample = describe();
    }

    SuiteReport finish() { return std::move(report_); }

private:
    SuiteReport report_;
};

// Portable draws: std::uniform_int_distribution is implementation-defined.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    std::int32_t uniform(std::int32_t lo, std::int32_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int32_t>(engine_() % span);
    }

    Rational rational() { return Rational(uniform(-9, 9), uniform(1, 4)); }

    LaurentPoly poly(std::int32_t max_terms, std::int32_t max_exp) {
        std::vector<LaurentPoly::Term> terms;
        const std::int32_t n = uniform(0, max_terms);
        for (std::int32_t i = 0; i < n; ++i) {
            terms.emplace_back(Monomial{uniform(-max_exp, max_exp), uniform(0, max_exp), uniform(0, max_exp)},
                               rational());
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

    /// Strictly increasing n-subset of {0..hi}.
    std::vector<std::int32_t> subset(std::size_t n, std::int32_t hi) {
        std::vector<std::int32_t> pool(static_cast<std::size_t>(hi) + 1);
        for (std::int32_t i = 0; i <= hi; ++i) pool[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = i + static_cast<std::size_t>(uniform(0, static_cast<std::int32_t>(pool.size() - i) - 1));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(n);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

std::vector<std::vector<std::int32_t>> subsets(std::size_t n, std::int32_t hi) {
    std::vector<std::vector<std::int32_t>> out;
    const std::uint32_t limit = std::uint32_t{1} << (hi + 1);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
        std::vector<std::int32_t> s;
        for (std::int32_t i = 0; i <= hi; ++i) {
            if (mask & (std::uint32_t{1} << i)) s.push_back(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<EndpointConfig> configs_up_to(std::size_t max_n, std::int32_t hi, bool aligned_only) {
    std::vector<EndpointConfig> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto pool = subsets(n, hi);
        for (const auto& s : pool) {
            for (const auto& e : pool) {
                EndpointConfig cfg(s, e);
                if (!aligned_only || cfg.is_aligned()) out.push_back(std::move(cfg));
            }
        }
    }
    return out;
}

std::string tuple_text(std::initializer_list<std::int32_t> v) {
    std::string s = "(";
    bool first = true;
    for (auto x : v) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(x);
    }
    return s + ")";
}

SuiteReport ring_suite(std::int32_t max, std::uint64_t seed) {
    Checker ck("ring");
    Draw draw(seed);
    const std::int32_t rounds = 25 * std::max(max, 1);
    for (std::int32_t t = 0; t < rounds; ++t) {
        const LaurentPoly f = draw.poly(max + 2, max);
        const LaurentPoly g = draw.poly(max + 2, max);
        const LaurentPoly h = draw.poly(max + 2, max);
        auto text = [&] { return "f=" + format(f) + "; g=" + format(g) + "; h=" + format(h); };
        ck.check((f + g) + h == f + (g + h), text);
        ck.check((f * g) * h == f * (g * h), text);
        ck.check(f + g == g + f && f * g == g * f, text);
        ck.check(f * (g + h) == f * g + f * h, text);
        if (!g.is_zero()) ck.check(exact_div(f * g, g) == f, text);
        ck.check(parse_poly(format(f)) == f, text);
        const Rational q0 = [&] {
            Rational v = draw.rational();
            return v.is_zero() ? Rational(1, 3) : v;
        }();
        const Rational x0 = draw.rational();
        const Rational y0 = draw.rational();
        ck.check(
            (f * g).evaluate(q0, x0, y0) == f.evaluate(q0, x0, y0) * g.evaluate(q0, x0, y0) &&
                (f + g).evaluate(q0, x0, y0) == f.evaluate(q0, x0, y0) + g.evaluate(q0, x0, y0),
            [&] { return text() + "; point=(" + q0.to_string() + "," + x0.to_string() + "," + y0.to_string() + ")"; });
    }
    return ck.finish();
}

SuiteReport paths_suite(std::int32_t max) {
    Checker ck("paths");
    for (std::int32_t a = 0; a <= max; ++a) {
        for (std::int32_t c = a; c <= max; ++c) {
            for (std::int32_t d = 0; d <= max; ++d) {
                for (std::int32_t b = d; b <= max; ++b) {
                    const LaurentPoly closed = gf_closed(a, b, c, d);
                    ck.check(closed == gf_recurrence(a, b, c, d),
                             [&] { return "gf_closed != gf_recurrence at " + tuple_text({a, b, c, d}); });
                    ck.check(closed.is_xy_homogeneous(c - a),
                             [&] { return "gf_closed not homogeneous at " + tuple_text({a, b, c, d}); });
                }
            }
        }
    }
    const std::int32_t span = std::min(max, 6);
    for (std::int32_t a = 0; a <= span; ++a) {
        for (std::int32_t d = 0; d <= span; ++d) {
            for (std::int32_t m = 0; m <= span; ++m) {
                for (std::int32_t e = 0; e <= span; ++e) {
                    const std::int32_t c = a + m;
                    const std::int32_t b = d + e;
                    LaurentPoly sum;
                    for (const auto& wp : enumerate_paths(a, b, c, d)) sum += wp.weight;
                    ck.check(sum == gf_closed(a, b, c, d),
                             [&] { return "gf_closed != path enumeration at " + tuple_text({a, b, c, d}); });
                }
            }
        }
    }
    for (std::int32_t a = 0; a <= max; ++a) {
        for (std::int32_t c = a; c <= max; ++c) {
            const LaurentPoly diag = gf_diag(a, c);
            ck.check(diag == gf_closed(a, a, c, 0), [&] { return "gf_diag != gf_closed at " + tuple_text({a, c}); });
            ck.check(diag.is_xy_homogeneous(c - a) && diag.swap_xy_invert_q() == diag,
                     [&] { return "gf_diag structure broken at " + tuple_text({a, c}); });
        }
    }
    for (std::int32_t a = 1; a <= max; ++a) {
        ck.check(gf_closed(a, 0, a - 1, 0).is_zero() && gf_recurrence(a, 0, a - 1, 0).is_zero() &&
                     gf_closed(0, a - 1, 0, a).is_zero() && gf_diag(a, a - 1).is_zero(),
                 [&] { return "out-of-domain value nonzero for a=" + std::to_string(a); });
    }
    return ck.finish();
}

SuiteReport ratio_suite(std::int32_t max, std::uint64_t seed) {
    Checker ck("ratio");
    for (std::int32_t a = 0; a <= max; ++a) {
        for (std::int32_t c = a; c <= max; ++c) {
            for (std::int32_t k = 0; k <= std::min(max, 5); ++k) {
                const ShiftFactor sf = shift_factor(a, c, k);
                const PochhammerRatio pr = shift_factor_pochhammer(a, c, k);
                ck.check(gf_diag(a + k, c + k) * sf.denom == gf_diag(a, c) * sf.numer,
                         [&] { return "shift factor contract fails at " + tuple_text({a, c, k}); });
                ck.check(sf.numer * pr.denom() == pr.numer() * sf.denom,
                         [&] { return "Pochhammer form disagrees at " + tuple_text({a, c, k}); });
            }
        }
    }
    for (const auto& cfg : configs_up_to(3, max, true)) {
        for (std::int32_t k = 0; k <= std::min(max, 4); ++k) {
            ck.check(ratio_identity_check(cfg, k).holds,
                     [&] { return "ratio identity fails for " + cfg.to_string() + " k=" + std::to_string(k); });
        }
    }
    Draw draw(seed);
    for (std::int32_t t = 0; t < max; ++t) {
        const auto n = static_cast<std::size_t>(draw.uniform(4, 5));
        const std::int32_t hi = max + 4;
        std::vector<std::int32_t> starts, ends;
        do {
            starts = draw.subset(n, hi);
            ends = draw.subset(n, hi);
        } while (!EndpointConfig(starts, ends).is_aligned());
        const EndpointConfig cfg(starts, ends);
        const std::int32_t k = draw.uniform(0, 4);
        ck.check(ratio_identity_check(cfg, k).holds,
                 [&] { return "ratio identity fails for " + cfg.to_string() + " k=" + std::to_string(k); });
    }
    return ck.finish();
}

SuiteReport lgv_suite(std::int32_t max, std::uint64_t seed) {
    Checker ck("lgv");
    const std::int32_t hi = std::min(max, kMaxBruteforceColumn);
    for (const auto& cfg : configs_up_to(3, hi, false)) {
        const LaurentPoly det = nlp_gf(cfg);
        ck.check(det == nlp_bruteforce(cfg), [&] { return "nlp_gf != nlp_bruteforce for " + cfg.to_string(); });
        if (!cfg.is_aligned()) ck.check(det.is_zero(), [&] { return "misaligned config nonzero: " + cfg.to_string(); });
        for (std::int32_t k = 0; k <= 1; ++k) {
            const PolyMatrix m = gf_matrix(cfg, k);
            ck.check(determinant(m) == determinant_fraction_free(m), [&] {
                return "determinant kernels disagree for " + cfg.to_string() + " k=" + std::to_string(k);
            });
        }
    }
    Draw draw(seed);
    for (std::int32_t t = 0; t < 10 * std::max(max, 1); ++t) {
        const auto n = static_cast<Eigen::Index>(draw.uniform(1, 4));
        PolyMatrix m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) m(i, j) = draw.poly(3, 2);
        }
        const LaurentPoly f = draw.poly(3, 2);
        const auto row = static_cast<Eigen::Index>(draw.uniform(0, static_cast<std::int32_t>(n) - 1));
        PolyMatrix scaled = m;
        for (Eigen::Index j = 0; j < n; ++j) scaled(row, j) = scaled(row, j) * f;
        ck.check(determinant(scaled) == determinant(m) * f,
                 [&] { return "multilinearity fails with f=" + format(f) + " row " + std::to_string(row); });
    }
    return ck.finish();
}

std::vector<Region> regions_up_to(std::int32_t max_x, std::int32_t max_h) {
    std::vector<Region> out;
    for (std::int32_t x = 1; x <= max_x; ++x) {
        for (std::int32_t h = 0; h <= max_h; ++h) {
            // Each row is undented, left, right or both: base-4 digits.
            std::int64_t combos = 1;
            for (std::int32_t i = 0; i < h; ++i) combos *= 4;
            for (std::int64_t m = 0; m < combos; ++m) {
                std::vector<std::int32_t> left, right;
                std::int64_t rest = m;
                for (std::int32_t row = 1; row <= h; ++row, rest /= 4) {
                    if (rest % 4 & 1) left.push_back(row);
                    if (rest % 4 & 2) right.push_back(row);
                }
                if (static_cast<std::int32_t>(left.size() + right.size()) == h) out.emplace_back(x, h, left, right);
            }
        }
    }
    return out;
}

SuiteReport tilings_suite(std::int32_t max) {
    Checker ck("tilings");
    for (const Region& r : regions_up_to(max, max)) {
        const EndpointConfig cfg = region_endpoints(r);
        ck.check(gf_tilings(r) == nlp_gf(cfg), [&] { return "gf_tilings != nlp_gf for " + r.to_string(); });

        std::size_t count = 0;
        std::set<std::vector<std::vector<Step>>> images;
        bool bijective = true;
        for_each_tiling(r, [&](const Tiling& t) {
            ++count;
            const auto family = tiling_to_paths(r, t);
            std::vector<std::vector<Step>> key;
            std::set<GridPoint> seen;
            std::size_t vertex_count = 0;
            std::vector<std::int32_t> path_labels, lozenge_labels;
            bool ok = family.size() == cfg.size();
            for (std::size_t i = 0; ok && i < family.size(); ++i) {
                ok = family[i].start == GridPoint{cfg.starts()[i], cfg.starts()[i]} &&
                     family[i].end() == GridPoint{cfg.ends()[i], 0};
                for (const auto& v : family[i].vertices()) {
                    seen.insert(v);
                    ++vertex_count;
                }
                const auto labels = family[i].right_labels();
                path_labels.insert(path_labels.end(), labels.begin(), labels.end());
                key.push_back(family[i].steps);
            }
            for (const auto& l : t.lozenges) {
                if (l.kind == LozengeKind::Vertical) lozenge_labels.push_back(lozenge_label(r, l));
            }
            std::sort(path_labels.begin(), path_labels.end());
            std::sort(lozenge_labels.begin(), lozenge_labels.end());
            std::int32_t expected_verticals = 0;
            for (std::size_t i = 0; i < cfg.size(); ++i) expected_verticals += cfg.ends()[i] - cfg.starts()[i];
            ok = ok && seen.size() == vertex_count && path_labels == lozenge_labels &&
                 static_cast<std::int32_t>(lozenge_labels.size()) == expected_verticals;
            bijective = bijective && images.insert(key).second;
            ck.check(ok, [&] { return "bijection check fails on a tiling of " + r.to_string(); });
        });
        ck.check(bijective, [&] { return "tiling_to_paths not injective for " + r.to_string(); });
        const bool enumerable =
            cfg.size() <= kMaxBruteforcePaths &&
            std::all_of(cfg.ends().begin(), cfg.ends().end(), [](std::int32_t c) { return c <= kMaxBruteforceColumn; });
        if (enumerable) {
            std::size_t families = 0;
            for_each_nonintersecting_family(cfg, [&](std::span<const LatticePath>) { ++families; });
            ck.check(families == count, [&] { return "tiling count != family count for " + r.to_string(); });
        }
    }
    return ck.finish();
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"ring", "paths", "ratio", "lgv", "tilings"};
    return names;
}

SuiteReport run_verify_suite(std::string_view suite, std::int32_t max, std::uint64_t seed) {
    if (max < 0) throw InvalidArgument("--max must be nonnegative");
    if (suite == "ring") return ring_suite(max, seed);
    if (suite == "paths") return paths_suite(max);
    if (suite == "ratio") return ratio_suite(max, seed);
    if (suite == "lgv") return lgv_suite(max, seed);
    if (suite == "tilings") return tilings_suite(max);
    throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace dentedhex
