#include <doctest.h>

#include <random>

#include "dentedhex/determinant.hpp"
#include "dentedhex/error.hpp"
#include "dentedhex/lgv.hpp"
#include "dentedhex/poly_io.hpp"
#include "oracles.hpp"

using namespace dentedhex;

namespace {

LaurentPoly P(const char* text) { return parse_poly(text); }

// (X + Y)(X q^-1 + Y q) / 4
const char* kTwoByTwo = "1/4*X^2*q^-1 + 1/4*X*Y*q^-1 + 1/4*X*Y*q + 1/4*Y^2*q";

struct Gen {
    std::mt19937_64 rng{7};
    int uniform(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }
    LaurentPoly poly() {
        std::vector<LaurentPoly::Term> terms;
        for (int i = uniform(0, 3); i > 0; --i) {
            terms.emplace_back(Monomial{uniform(-2, 2), uniform(0, 2), uniform(0, 2)}, Rational(uniform(-5, 5), uniform(1, 3)));
        }
        return LaurentPoly::from_terms(std::move(terms));
    }
};

}  // namespace

TEST_CASE("EndpointConfig validation") {
    CHECK_NOTHROW(EndpointConfig({0, 2}, {1, 3}));
    CHECK_THROWS_AS(EndpointConfig({1, 1}, {2, 3}), InvalidArgument);
    CHECK_THROWS_AS(EndpointConfig({0}, {1, 2}), InvalidArgument);
    CHECK_THROWS_AS(EndpointConfig({-1}, {1}), InvalidArgument);
    CHECK(EndpointConfig({0, 2}, {1, 3}).is_aligned());
    CHECK(!EndpointConfig({2}, {1}).is_aligned());
    CHECK(EndpointConfig().to_string() == "starts=- ends=-");
}

TEST_CASE("gf_matrix") {
    CHECK(gf_matrix(EndpointConfig(), 0).rows() == 0);
    const PolyMatrix one = gf_matrix(EndpointConfig({0}, {1}), 0);
    REQUIRE(one.rows() == 1);
    CHECK(one(0, 0) == P("1/2*X + 1/2*Y"));
    const PolyMatrix two = gf_matrix(EndpointConfig({0, 1}, {1, 2}), 0);
    CHECK(two(1, 0) == LaurentPoly(1));
    CHECK(two(0, 1) == gf_diag(0, 2));
    CHECK(two(1, 1) == gf_diag(1, 2));
    const PolyMatrix shifted = gf_matrix(EndpointConfig({0, 1}, {1, 2}), 2);
    CHECK(shifted(0, 1) == gf_diag(2, 4));
}

TEST_CASE("determinant small cases") {
    CHECK(determinant(PolyMatrix(0, 0)) == LaurentPoly(1));
    CHECK(determinant_fraction_free(PolyMatrix(0, 0)) == LaurentPoly(1));
    PolyMatrix single(1, 1);
    single(0, 0) = P("X*q^-2 + 3");
    CHECK(determinant(single) == single(0, 0));
    const PolyMatrix two = gf_matrix(EndpointConfig({0, 1}, {1, 2}), 0);
    CHECK(determinant(two) == P(kTwoByTwo));
    CHECK(determinant(two) == gf_diag(0, 1) * gf_diag(1, 2) - gf_diag(0, 2));
    CHECK(determinant_fraction_free(two) == P(kTwoByTwo));
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), InvalidArgument);
}

TEST_CASE("fraction-free kernel handles zero pivots") {
    PolyMatrix m(3, 3);
    m << LaurentPoly(), P("X"), P("1"), P("q"), LaurentPoly(), P("Y"), P("1"), P("q^-1"), LaurentPoly();
    CHECK(determinant_fraction_free(m) == oracle::leibniz_determinant(m));
    CHECK(determinant(m) == oracle::leibniz_determinant(m));
    PolyMatrix singular(2, 2);
    singular << P("X"), P("Y"), P("2*X"), P("2*Y");
    CHECK(determinant(singular).is_zero());
    CHECK(determinant_fraction_free(singular).is_zero());
}

TEST_CASE("kernels agree with Leibniz expansion on random matrices") {
    Gen gen;
    for (int round = 0; round < 30; ++round) {
        const int n = gen.uniform(1, 5);
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i, j) = gen.poly();
        }
        const LaurentPoly expected = oracle::leibniz_determinant(m);
        CHECK(determinant(m) == expected);
        CHECK(determinant_fraction_free(m) == expected);
    }
}

TEST_CASE("kernels are generic over the Eigen scalar") {
    RationalMatrix m(3, 3);
    m << Rational(1, 2), Rational(3), Rational(-1), Rational(0), Rational(2, 3), Rational(5), Rational(7), Rational(1),
        Rational(1, 4);
    const Rational expected = oracle::leibniz_determinant(m);
    CHECK(cofactor_determinant(m) == expected);
    CHECK(bareiss_determinant(m) == expected);
}

TEST_CASE("multilinearity") {
    Gen gen;
    for (int round = 0; round < 20; ++round) {
        const int n = gen.uniform(1, 4);
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i, j) = gen.poly();
        }
        const LaurentPoly f = gen.poly();
        const int row = gen.uniform(0, n - 1);
        PolyMatrix scaled = m;
        for (int j = 0; j < n; ++j) scaled(row, j) = scaled(row, j) * f;
        CHECK(determinant(scaled) == determinant(m) * f);
    }
}

TEST_CASE("nlp_bruteforce") {
    CHECK(nlp_bruteforce(EndpointConfig({0}, {1})) == P("1/2*X + 1/2*Y"));
    CHECK(nlp_bruteforce(EndpointConfig({0, 1}, {1, 2})) == P(kTwoByTwo));
    CHECK(nlp_bruteforce(EndpointConfig({0, 1}, {1, 2})) == oracle::w(0) * oracle::w(-1));
    CHECK(nlp_bruteforce(EndpointConfig({0, 2}, {1, 3})) == nlp_gf(EndpointConfig({0, 2}, {1, 3})));
    CHECK(nlp_bruteforce(EndpointConfig()) == LaurentPoly(1));
    CHECK(nlp_bruteforce(EndpointConfig({0, 1}, {0, 1})) == LaurentPoly(1));
    CHECK_THROWS_AS(nlp_bruteforce(EndpointConfig({0, 1, 2, 3, 4}, {4, 5, 6, 7, 8})), TooLarge);
    CHECK_THROWS_AS(nlp_bruteforce(EndpointConfig({0}, {9})), TooLarge);

    int families = 0;
    for_each_nonintersecting_family(EndpointConfig({0, 1}, {1, 2}), [&](std::span<const LatticePath> f) {
        ++families;
        CHECK(f[0].steps == std::vector<Step>{Step::Right});
        CHECK(f[1].steps == std::vector<Step>{Step::Right, Step::Down});
    });
    CHECK(families == 1);
}

TEST_CASE("misaligned configurations vanish") {
    const EndpointConfig cfg({0, 3}, {1, 2});
    CHECK(nlp_bruteforce(cfg).is_zero());
    CHECK(nlp_gf(cfg).is_zero());
}

TEST_CASE("ratio_identity_check") {
    const RatioCheck empty = ratio_identity_check(EndpointConfig(), 3);
    CHECK(empty.holds);
    CHECK(empty.factors.empty());

    const RatioCheck one = ratio_identity_check(EndpointConfig({0}, {1}), 1);
    CHECK(one.holds);
    REQUIRE(one.factors.size() == 1);
    CHECK(one.factors[0].plain.numer == P("1 - q^4"));
    CHECK(one.factors[0].plain.denom == P("q") * P("1 - q^2"));

    CHECK(ratio_identity_check(EndpointConfig({0, 1}, {1, 2}), 1).holds);
    CHECK(ratio_identity_check(EndpointConfig({0, 2, 3}, {2, 4, 6}), 3).holds);
    CHECK_THROWS_AS(ratio_identity_check(EndpointConfig({2}, {1}), 1), InvalidArgument);
}
