#include "dentedhex/lgv.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <sstream>

#include "dentedhex/determinant.hpp"
#include "dentedhex/error.hpp"
#include "dentedhex/qseries.hpp"

namespace dentedhex {

namespace {

bool strictly_increasing_nonnegative(const std::vector<std::int32_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i > 0 && v[i - 1] >= v[i]) return false;
    }
    return true;
}

std::string join(const std::vector<std::int32_t>& v) {
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

EndpointConfig::EndpointConfig(std::vector<std::int32_t> starts, std::vector<std::int32_t> ends)
    : starts_(std::move(starts)), ends_(std::move(ends)) {
    if (starts_.size() != ends_.size()) throw InvalidArgument("starts and ends differ in length");
    if (!strictly_increasing_nonnegative(starts_)) throw InvalidArgument("starts must be strictly increasing and >= 0");
    if (!strictly_increasing_nonnegative(ends_)) throw InvalidArgument("ends must be strictly increasing and >= 0");
}

bool EndpointConfig::is_aligned() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (starts_[i] > ends_[i]) return false;
    }
    return true;
}

std::string EndpointConfig::to_string() const { return "starts=" + join(starts_) + " ends=" + join(ends_); }

PolyMatrix gf_matrix(const EndpointConfig& cfg, std::int32_t k) {
    if (k < 0) throw InvalidArgument("shift k must be nonnegative");
    const auto n = static_cast<Eigen::Index>(cfg.size());
    PolyMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = gf_diag(cfg.starts()[static_cast<std::size_t>(i)] + k, cfg.ends()[static_cast<std::size_t>(j)] + k);
        }
    }
    return m;
}

LaurentPoly determinant(const PolyMatrix& m) { return cofactor_determinant(m); }

LaurentPoly determinant_fraction_free(const PolyMatrix& m) { return bareiss_determinant(m); }

LaurentPoly nlp_gf(const EndpointConfig& cfg) { return determinant(gf_matrix(cfg, 0)); }

void for_each_nonintersecting_family(const EndpointConfig& cfg,
                                     const std::function<void(std::span<const LatticePath>)>& visit) {
    const std::size_t n = cfg.size();
    if (n > kMaxBruteforcePaths) throw TooLarge("brute-force families limited to 4 paths");
    for (std::int32_t c : cfg.ends()) {
        if (c > kMaxBruteforceColumn) throw TooLarge("brute-force families limited to end columns <= 8");
    }

    std::vector<std::vector<LatticePath>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t a = cfg.starts()[i];
        for (auto& wp : enumerate_paths(a, a, cfg.ends()[i], 0)) candidates[i].push_back(std::move(wp.path));
        if (candidates[i].empty()) return;
    }

    // Grid points satisfy 0 <= b <= a <= 8, so a * 16 + b fits in 144 bits.
    using Occupancy = std::bitset<144>;
    auto cell = [](const GridPoint& p) { return static_cast<std::size_t>(p.a * 16 + p.b); };

    std::vector<LatticePath> family(n);
    auto extend = [&](auto&& self, std::size_t i, const Occupancy& used) -> void {
        if (i == n) {
            visit(std::span<const LatticePath>(family));
            return;
        }
        for (const auto& path : candidates[i]) {
            Occupancy next = used;
            bool disjoint = true;
            for (const auto& v : path.vertices()) {
                if (next.test(cell(v))) {
                    disjoint = false;
                    break;
                }
                next.set(cell(v));
            }
            if (!disjoint) continue;
            family[i] = path;
            self(self, i + 1, next);
        }
    };
    extend(extend, 0, Occupancy{});
}

LaurentPoly nlp_bruteforce(const EndpointConfig& cfg) {
    // Families are tallied by their sorted label multiset so that each
    // distinct weight is expanded once.
    std::map<std::vector<std::int32_t>, std::int64_t> tally;
    for_each_nonintersecting_family(cfg, [&](std::span<const LatticePath> family) {
        std::vector<std::int32_t> labels;
        for (const auto& p : family) {
            const auto l = p.right_labels();
            labels.insert(labels.end(), l.begin(), l.end());
        }
        std::sort(labels.begin(), labels.end());
        ++tally[labels];
    });
    LaurentPoly sum;
    for (const auto& [labels, count] : tally) {
        LaurentPoly w(count);
        for (std::int32_t label : labels) w *= step_weight(label);
        sum += w;
    }
    return sum;
}

RatioCheck ratio_identity_check(const EndpointConfig& cfg, std::int32_t k) {
    if (!cfg.is_aligned()) throw InvalidArgument("ratio identity requires a_i <= c_i");
    if (k < 0) throw InvalidArgument("shift k must be nonnegative");

    RatioCheck check;
    LaurentPoly numer(1);
    LaurentPoly denom(1);
    bool factors_agree = true;
    for (std::size_t l = 0; l < cfg.size(); ++l) {
        const std::int32_t a = cfg.starts()[l];
        const std::int32_t c = cfg.ends()[l];
        RatioFactor f{a, c, shift_factor(a, c, k), shift_factor_pochhammer(a, c, k)};
        numer *= f.plain.numer;
        denom *= f.plain.denom;
        factors_agree = factors_agree && f.plain.numer * f.pochhammer.denom() == f.pochhammer.numer() * f.plain.denom;
        check.factors.push_back(std::move(f));
    }
    const LaurentPoly shifted = determinant(gf_matrix(cfg, k));
    const LaurentPoly base = k == 0 ? shifted : determinant(gf_matrix(cfg, 0));
    check.holds = factors_agree && shifted * denom == base * numer;
    return check;
}

}  // namespace dentedhex
