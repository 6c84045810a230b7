#pragma once

// Exact determinants over commutative rings. Both kernels work for any
// Eigen scalar with +, -, * and ==; the fraction-free kernel also needs an
// ADL-visible exact_quotient(a, b) for divisions known to be exact.

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dentedhex/error.hpp"

namespace dentedhex {

/// Laplace expansion along rows with every minor memoized by its column
/// subset: O(2^n * n) ring multiplications and no division.
template <typename Derived>
typename Derived::Scalar cofactor_determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    const auto n = static_cast<unsigned>(m.rows());
    if (n > 24) throw TooLarge("cofactor determinant limited to 24 x 24");

    const Scalar zero(0);
    // minors[S] = det of the last popcount(S) rows restricted to columns S.
    std::vector<Scalar> minors(std::size_t{1} << n);
    minors[0] = Scalar(1);
    for (std::uint32_t set = 1; set < (std::uint32_t{1} << n); ++set) {
        const auto row = static_cast<Eigen::Index>(n - static_cast<unsigned>(std::popcount(set)));
        Scalar acc(0);
        bool negate = false;
        for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
            const auto col = static_cast<Eigen::Index>(std::countr_zero(rest));
            const Scalar& entry = m(row, col);
            const Scalar& minor = minors[set & ~(std::uint32_t{1} << col)];
            if (!(entry == zero) && !(minor == zero)) {
                if (negate) {
                    acc = acc - entry * minor;
                } else {
                    acc = acc + entry * minor;
                }
            }
            negate = !negate;
        }
        minors[set] = std::move(acc);
    }
    return minors.back();
}

/// Bareiss fraction-free elimination. Every division is exact, so the
/// computation never leaves the ring.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1);

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
    const Scalar zero(0);
    const Scalar one(1);
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && a(pivot, k) == zero) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar cross = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = (cross == zero || previous == one) ? std::move(cross) : exact_quotient(cross, previous);
            }
            a(i, k) = zero;
        }
        previous = a(k, k);
    }
    Scalar det = a(n - 1, n - 1);
    return negate ? Scalar(zero - det) : det;
}

}  // namespace dentedhex
