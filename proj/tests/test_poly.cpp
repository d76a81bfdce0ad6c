#include <doctest.h>

#include <random>

#include "udr/poly.hpp"

using namespace udr;

namespace {

Poly randomPoly(std::mt19937_64& rng, int n, int D, CoeffMode mode, std::uint32_t p) {
    std::uniform_int_distribution<int> termCount(0, 5), expo(0, 3), coef(-4, 4);
    Poly f(n, D, mode, p);
    int terms = termCount(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] =
            static_cast<std::uint8_t>(expo(rng));
        long c = coef(rng);
        f.addTerm(Monomial(e), Coeff::integer(c).convertTo(mode, p));
    }
    return f;
}

} // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("addition examples") {
    const int n = 2, D = 6;
    auto P = [&](const char* s) { return Poly::parse(s, n, D, CoeffMode::ExactInt); };
    CHECK((P("t1") + Poly::parse("-t1", n, D, CoeffMode::ExactInt)).isZero());
    CHECK((P("t2 + t1^2") + P("t1*t2")).text() == "t2 + t1^2 + t1*t2");
    // characteristic 2
    Poly a = Poly::parse("t1", n, D, CoeffMode::PrimeField, 2);
    CHECK((a + a).isZero());
}

TEST_CASE("multiplication examples") {
    const int n = 2;
    auto P = [&](const char* s, int D) { return Poly::parse(s, n, D, CoeffMode::ExactInt); };
    CHECK((P("t1", 3) * P("t2", 3)).text() == "t1*t2");
    // truncation at D = 3 kills t1 * t1^2
    CHECK((P("t1", 3) * P("t1^2", 3)).isZero());
    CHECK((P("t2 + t1^2", 5) * P("t1", 5)).text() == "t1*t2 + t1^3");
}

TEST_CASE("mode and shape mismatches are rejected") {
    Poly a(2, 5, CoeffMode::ExactInt);
    Poly b(2, 6, CoeffMode::ExactInt);
    Poly c(3, 5, CoeffMode::ExactInt);
    Poly d(2, 5, CoeffMode::PrimeField, 2);
    CHECK_THROWS_AS(a + b, MismatchError);
    CHECK_THROWS_AS(a + c, MismatchError);
    CHECK_THROWS_AS(a * d, MismatchError);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (auto [mode, p] : std::vector<std::pair<CoeffMode, std::uint32_t>>{
             {CoeffMode::ExactInt, 0}, {CoeffMode::Rational, 0}, {CoeffMode::PrimeField, 3}}) {
        for (int trial = 0; trial < 60; ++trial) {
            Poly a = randomPoly(rng, 3, 6, mode, p);
            Poly b = randomPoly(rng, 3, 6, mode, p);
            Poly c = randomPoly(rng, 3, 6, mode, p);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("text form and parse round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Poly f = randomPoly(rng, 3, 7, CoeffMode::ExactInt, 0);
        Poly g = Poly::parse(f.text(), 3, 7, CoeffMode::ExactInt);
        CHECK(f == g);
    }
    // display order ascends through the graded order
    Poly h = Poly::parse("t1^2*t2 + t2^2", 2, 6, CoeffMode::ExactInt);
    CHECK(h.text() == "t2^2 + t1^2*t2");
}

TEST_CASE("weight grading helpers") {
    Poly f = Poly::parse("t2 + t1^2", 2, 6, CoeffMode::ExactInt);
    CHECK(f.homogeneousWeight() == 2);
    Poly g = Poly::parse("t1 + t2", 2, 6, CoeffMode::ExactInt);
    CHECK_FALSE(g.homogeneousWeight().has_value());
    CHECK(g.weightComponents().size() == 2);
    CHECK(Poly(2, 6, CoeffMode::ExactInt).homogeneousWeight() == 0);
}

TEST_CASE("zero polynomial degree is undefined") {
    Poly z(2, 5, CoeffMode::ExactInt);
    CHECK_FALSE(z.degree().has_value());
    CHECK(z.isZero());
}

TEST_CASE("substitution") {
    // substitute t1 -> eps-like nilpotent: t1 -> t1, t2 -> 0 of t2 + t1^2
    Poly f = Poly::parse("t2 + t1^2", 2, 6, CoeffMode::ExactInt);
    std::vector<Poly> vals{Poly::variable(1, 1, 6, CoeffMode::ExactInt),
                           Poly::zero(1, 6, CoeffMode::ExactInt)};
    CHECK(f.substitute(vals).text() == "t1^2");
}

TEST_SUITE_END();
