// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dentedhex/lgv.hpp"
#include "dentedhex/paths.hpp"
#include "dentedhex/poly_io.hpp"
#include "dentedhex/tilings.hpp"

using namespace dentedhex;

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::string failure;

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (!ok && failure.empty()) failure = describe();
    }
};

bool report(const char* id, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.failure.empty() && limit_seconds > 0 && seconds > limit_seconds) {
        o.failure = "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s";
    }
    const bool pass = o.failure.empty();
    std::cout << id << ' ' << (pass ? "PASS" : "FAIL") << " (" << o.cases << " cases, " << seconds << " s)";
    if (!pass) std::cout << ": " << o.failure;
    std::cout << std::endl;
    return pass;
}

std::string quad(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d) {
    std::ostringstream s;
    s << "a=" << a << " b=" << b << " c=" << c << " d=" << d;
    return s.str();
}

std::vector<std::vector<std::int32_t>> subsets(std::int32_t lo, std::int32_t hi, std::size_t size) {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> cur;
    std::function<void(std::int32_t)> rec = [&](std::int32_t next) {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::int32_t v = next; v <= hi; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(lo);
    return out;
}

bool aligned(const std::vector<std::int32_t>& s, const std::vector<std::int32_t>& e) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] > e[i]) return false;
    }
    return true;
}

struct Trial {
    EndpointConfig cfg;
    std::int32_t k;
};

// Aligned configs with n <= 3 over {0..6}, k = 0..4, then 20 seeded random
// configs with n in {4, 5} and ends <= 10, each at k = 0..4.
std::vector<Trial> ratio_trials() {
    std::vector<Trial> out;
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto sets = subsets(0, 6, n);
        for (const auto& s : sets) {
            for (const auto& e : sets) {
                if (!aligned(s, e)) continue;
                for (std::int32_t k = 0; k <= 4; ++k) out.push_back({EndpointConfig(s, e), k});
            }
        }
    }
    std::mt19937_64 rng(20200);
    for (int drawn = 0; drawn < 20;) {
        const std::size_t n = 4 + rng() % 2;
        std::vector<std::int32_t> pool(11);
        for (std::int32_t i = 0; i <= 10; ++i) pool[static_cast<std::size_t>(i)] = i;
        auto pick = [&] {
            std::vector<std::int32_t> p = pool, chosen;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t j = i + rng() % (p.size() - i);
                std::swap(p[i], p[j]);
                chosen.push_back(p[i]);
            }
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        };
        const auto s = pick();
        const auto e = pick();
        if (!aligned(s, e)) continue;
        ++drawn;
        for (std::int32_t k = 0; k <= 4; ++k) out.push_back({EndpointConfig(s, e), k});
    }
    return out;
}

std::vector<Region> master_regions() {
    std::vector<Region> out;
    for (std::int32_t x = 1; x <= 3; ++x) {
        for (std::int32_t h = 0; h <= 4; ++h) {
            std::int32_t combos = 1;
            for (std::int32_t i = 0; i < h; ++i) combos *= 4;
            for (std::int32_t code = 0; code < combos; ++code) {
                std::vector<std::int32_t> left, right;
                std::int32_t rest = code;
                for (std::int32_t row = 1; row <= h; ++row, rest /= 4) {
                    if (rest % 4 == 1 || rest % 4 == 3) left.push_back(row);
                    if (rest % 4 == 2 || rest % 4 == 3) right.push_back(row);
                }
                if (left.size() + right.size() == static_cast<std::size_t>(h)) out.emplace_back(x, h, left, right);
            }
        }
    }
    return out;
}

}  // namespace

int main() {
    bool ok = true;

    ok &= report("AC-1", 60, [] {
        Outcome o;
        for (std::int32_t a = 0; a <= 8; ++a)
            for (std::int32_t c = a; c <= 8; ++c)
                for (std::int32_t d = 0; d <= 8; ++d)
                    for (std::int32_t b = d; b <= 8; ++b)
                        o.expect(gf_closed(a, b, c, d) == gf_recurrence(a, b, c, d), [&] { return quad(a, b, c, d); });
        return o;
    });

    ok &= report("AC-2", 60, [] {
        Outcome o;
        for (std::int32_t a = 0; a <= 6; ++a)
            for (std::int32_t c = a; c <= a + 6; ++c)
                for (std::int32_t d = 0; d <= 6; ++d)
                    for (std::int32_t b = d; b <= d + 6; ++b) {
                        LaurentPoly sum;
                        for (const auto& wp : enumerate_paths(a, b, c, d)) sum += wp.weight;
                        o.expect(sum == gf_closed(a, b, c, d), [&] { return quad(a, b, c, d); });
                    }
        return o;
    });

    ok &= report("AC-3", 0, [] {
        Outcome o;
        for (std::int32_t a = 0; a <= 10; ++a)
            for (std::int32_t c = a; c <= 10; ++c)
                o.expect(gf_diag(a, c) == gf_closed(a, a, c, 0), [&] { return quad(a, a, c, 0); });
        return o;
    });

    ok &= report("AC-4", 0, [] {
        Outcome o;
        for (std::int32_t a = 0; a <= 8; ++a)
            for (std::int32_t c = a; c <= 8; ++c)
                for (std::int32_t k = 0; k <= 5; ++k) {
                    const LaurentPoly shifted = gf_diag(a + k, c + k);
                    const LaurentPoly base = gf_diag(a, c);
                    const ShiftFactor f = shift_factor(a, c, k);
                    const PochhammerRatio p = shift_factor_pochhammer(a, c, k);
                    auto where = [&] { return "a=" + std::to_string(a) + " c=" + std::to_string(c) + " k=" + std::to_string(k); };
                    o.expect(shifted * f.denom == base * f.numer, where);
                    o.expect(shifted * p.denom() == base * p.numer(), where);
                }
        return o;
    });

    const std::vector<Trial> trials = ratio_trials();

    ok &= report("AC-5", 300, [&] {
        Outcome o;
        for (const Trial& t : trials) {
            o.expect(ratio_identity_check(t.cfg, t.k).holds,
                     [&] { return t.cfg.to_string() + " k=" + std::to_string(t.k); });
        }
        return o;
    });

    ok &= report("AC-6", 0, [] {
        Outcome o;
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto sets = subsets(0, 5, n);
            for (const auto& s : sets)
                for (const auto& e : sets) {
                    const EndpointConfig cfg(s, e);
                    o.expect(nlp_gf(cfg) == nlp_bruteforce(cfg), [&] { return cfg.to_string(); });
                }
        }
        return o;
    });

    const std::vector<Region> regions = master_regions();

    ok &= report("AC-7", 180, [&] {
        Outcome o;
        for (const Region& r : regions) {
            o.expect(gf_tilings(r) == nlp_gf(region_endpoints(r)), [&] { return r.to_string(); });
        }
        return o;
    });

    ok &= report("AC-8", 0, [&] {
        Outcome o;
        for (const Region& r : regions) {
            const EndpointConfig cfg = region_endpoints(r);
            std::size_t tilings = 0;
            for_each_tiling(r, [&](const Tiling& t) {
                ++tilings;
                auto where = [&] { return r.to_string() + " tiling " + std::to_string(tilings); };
                const auto paths = tiling_to_paths(r, t);
                bool shape = paths.size() == cfg.size();
                std::vector<GridPoint> seen;
                LaurentPoly weight(1);
                for (std::size_t i = 0; shape && i < paths.size(); ++i) {
                    shape = paths[i].start == GridPoint{cfg.starts()[i], cfg.starts()[i]} &&
                            paths[i].end() == GridPoint{cfg.ends()[i], 0};
                    const auto v = paths[i].vertices();
                    seen.insert(seen.end(), v.begin(), v.end());
                    weight *= paths[i].weight();
                }
                o.expect(shape, where);
                std::sort(seen.begin(), seen.end());
                o.expect(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), where);
                o.expect(weight == tiling_weight(r, t), where);
            });
            std::size_t families = 0;
            for_each_nonintersecting_family(cfg, [&](std::span<const LatticePath>) { ++families; });
            o.expect(families == tilings, [&] {
                return r.to_string() + ": " + std::to_string(tilings) + " tilings, " + std::to_string(families) +
                       " families";
            });
        }
        return o;
    });

    ok &= report("AC-9", 5, [] {
        Outcome o;
        const Region r(5, 7, {1, 2, 4, 6}, {3, 5, 7});
        const EndpointConfig cfg = region_endpoints(r);
        const LaurentPoly gf = nlp_gf(cfg);
        o.expect(gf == gf_tilings(r), [] { return std::string("determinant differs from tiling sum"); });
        for (std::int32_t k = 1; k <= 2; ++k) {
            o.expect(ratio_identity_check(cfg, k).holds, [k] { return "ratio k=" + std::to_string(k); });
        }
        for_each_tiling(r, [&](const Tiling& t) {
            for (const Lozenge& l : t.lozenges) {
                if (l.kind != LozengeKind::Vertical) continue;
                const std::int32_t label = lozenge_label(r, l);
                o.expect(label >= -10 && label <= 10, [label] { return "label " + std::to_string(label); });
            }
        });
        for (std::int32_t i = 1; i < r.h(); ++i) {
            for (std::int32_t j = 1; j <= r.x() + i; ++j) {
                const Lozenge l = Lozenge::from_up(LozengeKind::Vertical, i, j);
                if (!r.contains(l.up) || !r.contains(l.down)) continue;
                const std::int32_t label = lozenge_label(r, l);
                o.expect(label >= -10 && label <= 10, [label] { return "position label " + std::to_string(label); });
            }
        }
        return o;
    });

    ok &= report("AC-10", 0, [] {
        Outcome o;
        for (std::int32_t a = 0; a <= 10; ++a)
            for (std::int32_t c = a; c <= 10; ++c) {
                const LaurentPoly g = gf_diag(a, c);
                auto where = [&] { return "a=" + std::to_string(a) + " c=" + std::to_string(c); };
                o.expect(g.is_xy_homogeneous(c - a), where);
                o.expect(g.swap_xy_invert_q() == g, where);
            }
        return o;
    });

    ok &= report("AC-11", 0, [&] {
        Outcome o;
        for (const Trial& t : trials) {
            const PolyMatrix m = gf_matrix(t.cfg, t.k);
            o.expect(determinant(m) == determinant_fraction_free(m),
                     [&] { return t.cfg.to_string() + " k=" + std::to_string(t.k); });
        }
        return o;
    });

    std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
    return ok ? 0 : 1;
}
