#include <doctest.h>

#include <random>

#include "dentedhex/error.hpp"
#include "dentedhex/laurent_poly.hpp"
#include "dentedhex/poly_io.hpp"
#include "dentedhex/rational.hpp"

using namespace dentedhex;

namespace {

LaurentPoly P(const char* text) { return parse_poly(text); }

// Half-weight (X q^i + Y q^-i)/2 written out by hand.
LaurentPoly half_weight(int i) {
    return LaurentPoly(Monomial{i, 1, 0}, Rational(1, 2)) + LaurentPoly(Monomial{-i, 0, 1}, Rational(1, 2));
}

struct RandomPolys {
    std::mt19937_64 rng{20240611};

    int uniform(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

    LaurentPoly operator()() {
        std::vector<LaurentPoly::Term> terms;
        const int n = uniform(0, 6);
        for (int i = 0; i < n; ++i) {
            terms.emplace_back(Monomial{uniform(-4, 4), uniform(0, 3), uniform(0, 3)},
                               Rational(uniform(-20, 20), uniform(1, 6)));
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

    Rational point() {
        const int num = uniform(-7, 7);
        return Rational(num == 0 ? 1 : num, uniform(1, 5));
    }
};

}  // namespace

TEST_CASE("Rational stays in lowest terms") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("add") {
    CHECK(P("X") + P("Y") == P("X + Y"));
    CHECK(P("X + Y") + P("-X") == P("Y"));
    // 2 w_1 + 2 w_-1 = (q + 1/q)(X + Y)
    CHECK(half_weight(1).scaled(2) + half_weight(-1).scaled(2) == P("q + q^-1") * P("X + Y"));
    CHECK(format(half_weight(1).scaled(2) + half_weight(-1).scaled(2)) == "X*q^-1 + X*q + Y*q^-1 + Y*q");
}

TEST_CASE("mul") {
    CHECK(P("X + Y") * P("X - Y") == P("X^2 - Y^2"));
    CHECK(LaurentPoly(1) * P("1/3*X*q^-2 + Y") == P("1/3*X*q^-2 + Y"));
    CHECK(P("1 - q^2") * P("1 + q^2") == P("1 - q^4"));
    CHECK((P("X + Y") * LaurentPoly()).is_zero());
}

TEST_CASE("mul falls back to big integers when coefficients overflow 128 bits") {
    const LaurentPoly big = P("123456789012345678901234567890*X + 98765432109876543210987654321/7*q");
    const LaurentPoly sq = big * big;
    CHECK(sq.coefficient(Monomial{0, 2, 0}) ==
          Rational::parse("15241578753238836750495351562536198787501905199875019052100"));
    CHECK(exact_div(sq, big) == big);
}

TEST_CASE("exact_div") {
    CHECK(exact_div(P("1 - q^4"), P("1 - q^2")) == P("1 + q^2"));
    CHECK(exact_div(P("X^2 - Y^2"), P("X + Y")) == P("X - Y"));
    CHECK_THROWS_AS(exact_div(P("X + Y"), P("1 - q^2")), NotDivisible);
    CHECK_THROWS_AS(exact_div(P("X"), LaurentPoly()), DivisionByZero);
    CHECK_THROWS_AS(exact_div(P("X"), P("Y")), NotDivisible);
    CHECK(exact_div(P("X*q^-3"), P("2*q^2")) == P("1/2*X*q^-5"));
    CHECK(exact_div(LaurentPoly(), P("X + q")).is_zero());
    CHECK(exact_div(P("1 + q^3"), P("1 + q")) == P("1 - q + q^2"));
    CHECK_THROWS_AS(exact_div(P("1 + q^2"), P("1 + q")), NotDivisible);
}

TEST_CASE("evaluate") {
    CHECK(P("X + Y").evaluate(1, 1, 1) == 2);
    CHECK(P("q^-1").evaluate(Rational(1, 2), 0, 0) == 2);
    CHECK(P("1/2*X + 1/2*Y").evaluate(1, 1, 1) == 1);
    CHECK(P("q^2 + X").evaluate(0, 3, 0) == 3);
    CHECK_THROWS_AS(P("q^-1 + X").evaluate(0, 1, 1), EvalAtZero);
}

TEST_CASE("parse and format") {
    CHECK(P("1/2*X + 1/2*Y") == half_weight(0));
    CHECK(P("q^-3") == LaurentPoly::q(-3));
    CHECK(format(P("Y + X")) == "X + Y");
    CHECK(format(LaurentPoly()) == "0");
    CHECK(format(P("-1 + q")) == "-1 + q");
    CHECK(format(P("-X*Y + 3/4*q^-2")) == "3/4*q^-2 - X*Y");
    CHECK(format(P("q*X*X")) == "X^2*q");
    CHECK(P("X - X").is_zero());

    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("X +"), ParseError);
    CHECK_THROWS_AS(P("X^-1"), ParseError);
    CHECK_THROWS_AS(P("Z"), ParseError);
    CHECK_THROWS_AS(P("1/0*X"), ParseError);
    try {
        P("X + 2*W");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("json round trip and schema") {
    const LaurentPoly p = P("-1/2*X*q^-1 + 3*Y^2");
    CHECK(to_json(p) == R"({"terms":[{"c":"-1/2","q":-1,"X":1,"Y":0},{"c":"3/1","q":0,"X":0,"Y":2}]})");
    CHECK(from_json(to_json(p)) == p);
    CHECK_THROWS_AS(from_json("{\"terms\":[{\"c\":\"1\"}]}"), ParseError);
}

TEST_CASE("ring axioms on random sparse inputs") {
    RandomPolys gen;
    for (int round = 0; round < 200; ++round) {
        const LaurentPoly f = gen(), g = gen(), h = gen();
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
        if (!g.is_zero()) CHECK(exact_div(f * g, g) == f);
        CHECK(parse_poly(format(f)) == f);
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    RandomPolys gen;
    for (int round = 0; round < 100; ++round) {
        const LaurentPoly f = gen(), g = gen();
        const Rational q0 = gen.point(), x0 = gen.point(), y0 = gen.point();
        CHECK((f * g).evaluate(q0, x0, y0) == f.evaluate(q0, x0, y0) * g.evaluate(q0, x0, y0));
        CHECK((f + g).evaluate(q0, x0, y0) == f.evaluate(q0, x0, y0) + g.evaluate(q0, x0, y0));
    }
}

TEST_CASE("canonical form invariants") {
    RandomPolys gen;
    for (int round = 0; round < 50; ++round) {
        const LaurentPoly f = gen() * gen();
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(!f.terms()[i].second.is_zero());
            CHECK(f.terms()[i].first.x >= 0);
            CHECK(f.terms()[i].first.y >= 0);
            if (i > 0) CHECK(f.terms()[i - 1].first < f.terms()[i].first);
        }
    }
    CHECK_THROWS_AS(LaurentPoly(Monomial{0, -1, 0}, 1), InvalidArgument);
}
