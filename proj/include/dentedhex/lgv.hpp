#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dentedhex/eigen_support.hpp"
#include "dentedhex/laurent_poly.hpp"
#include "dentedhex/paths.hpp"

namespace dentedhex {

/// Path families from diagonal points (a_i, a_i) to axis points (c_j, 0).
/// Both sequences are strictly increasing, nonnegative and equally long.
class EndpointConfig {
public:
    EndpointConfig() = default;
    /// Throws InvalidArgument when the invariants fail.
    EndpointConfig(std::vector<std::int32_t> starts, std::vector<std::int32_t> ends);

    const std::vector<std::int32_t>& starts() const { return starts_; }
    const std::vector<std::int32_t>& ends() const { return ends_; }
    std::size_t size() const { return starts_.size(); }
    /// True when a_i <= c_i for every i.
    bool is_aligned() const;

    std::string to_string() const;

    friend bool operator==(const EndpointConfig&, const EndpointConfig&) = default;

private:
    std::vector<std::int32_t> starts_;
    std::vector<std::int32_t> ends_;
};

/// M(i, j) = gf_diag(a_i + k, c_j + k).
PolyMatrix gf_matrix(const EndpointConfig& cfg, std::int32_t k);

/// Primary kernel: memoized cofactor expansion.
LaurentPoly determinant(const PolyMatrix& m);
/// Cross-check kernel: Bareiss elimination with exact division.
LaurentPoly determinant_fraction_free(const PolyMatrix& m);

/// Generating function of vertex-disjoint families, as det(gf_matrix(cfg, 0)).
LaurentPoly nlp_gf(const EndpointConfig& cfg);

inline constexpr std::size_t kMaxBruteforcePaths = 4;
inline constexpr std::int32_t kMaxBruteforceColumn = 8;

/// Calls visit once per family of pairwise vertex-disjoint paths
/// (a_i,a_i) -> (c_i,0). Throws TooLarge past the enumeration bounds.
void for_each_nonintersecting_family(const EndpointConfig& cfg,
                                     const std::function<void(std::span<const LatticePath>)>& visit);

/// Direct sum of family weights over vertex-disjoint families.
LaurentPoly nlp_bruteforce(const EndpointConfig& cfg);

struct RatioFactor {
    std::int32_t start = 0;
    std::int32_t end = 0;
    ShiftFactor plain;
    PochhammerRatio pochhammer;
};

struct RatioCheck {
    bool holds = false;
    std::vector<RatioFactor> factors;
};

/// Verifies det(gf_matrix(cfg,k)) * prod D_l == det(gf_matrix(cfg,0)) * prod N_l
/// without dividing, and that each factor's Pochhammer form cross-multiplies
/// to its plain form. Requires a_i <= c_i.
RatioCheck ratio_identity_check(const EndpointConfig& cfg, std::int32_t k);

}  // namespace dentedhex
