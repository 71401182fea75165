#include <doctest.h>

#include "support.hpp"
#include "vft/weierstrass.hpp"

using namespace vft;
using namespace vft_test;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a vft::Error");
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("to_weierstrass accepts the counterexample cubic and records its data") {
    WeierstrassPolynomial f = to_weierstrass(P("x^3 + x*y^2 + y^3"));
    CHECK(f.degree() == 3);
    CHECK(f.coefficient(2).is_zero());
    CHECK(f.coefficient(1) == P("y^2"));
    CHECK(f.coefficient(0) == P("y^3"));
    CHECK_FALSE(f.contains_x_axis());
    CHECK(f.expanded() == P("x^3 + x*y^2 + y^3"));
    CHECK(f.tail() == P("x*y^2 + y^3"));
}

TEST_CASE("to_weierstrass rejects what it must") {
    CHECK(code_of([] { to_weierstrass(P("x^3 + x + y")); }) == ErrorCode::NotDistinguished);
    CHECK(code_of([] { to_weierstrass(P("2*x^3 + y^3")); }) == ErrorCode::NotMonic);
    CHECK(code_of([] { to_weierstrass(P("x^3*y + x^3 + y^2")); }) == ErrorCode::NotMonic);
    CHECK(code_of([] { to_weierstrass(P("y^2")); }) == ErrorCode::NotMonic);
    CHECK(code_of([] { to_weierstrass(MultiPoly::zero(2)); }) == ErrorCode::NotMonic);
    // F_0 = 0 is allowed by the form itself; it is only flagged.
    CHECK(to_weierstrass(P("x^3 + x*y^2")).contains_x_axis());
}

TEST_CASE("euclidean division worked examples") {
    WeierstrassPolynomial cubic = to_weierstrass(P("x^3 + x*y^2 + y^3"));
    DivisionResult d = euclidean_divide(P("x^4"), cubic);
    CHECK(d.quotient == P("x"));
    CHECK(d.remainder == P("-x^2*y^2 - x*y^3"));

    DivisionResult low = euclidean_divide(P("x^2"), cubic);
    CHECK(low.quotient.is_zero());
    CHECK(low.remainder == P("x^2"));

    WeierstrassPolynomial f2 = to_weierstrass(P("x^2 + y^3"));
    DivisionResult d2 = euclidean_divide(P("x^3"), f2);
    CHECK(d2.quotient == P("x"));
    CHECK(d2.remainder == P("-x*y^3"));
    CHECK(d2.remainder == -P("x") * f2.coefficient(0));
}

TEST_CASE("division identity, uniqueness, linearity on random inputs") {
    Rng rng(60601);
    for (int trial = 0; trial < 200; ++trial) {
        int k = rng.uniform(3, 5);
        WeierstrassPolynomial f = to_weierstrass(rng.weierstrass_input(2, k, 4, 5));
        MultiPoly g = rng.poly(2, 8, 7, 9);
        DivisionResult d = euclidean_divide(g, f);
        CHECK(d.quotient * f.expanded() + d.remainder == g);
        CHECK(d.remainder.degree_in_x() < k);
        auto pt = rng.point(2, 5);
        CHECK(eval_at(d.quotient, pt) * eval_at(f.expanded(), pt) + eval_at(d.remainder, pt) ==
              eval_at(g, pt));

        DivisionResult again = euclidean_divide(d.quotient * f.expanded() + d.remainder, f);
        CHECK(again.quotient == d.quotient);
        CHECK(again.remainder == d.remainder);

        MultiPoly g2 = rng.poly(2, 8, 7, 9);
        CHECK(euclidean_divide(g + g2, f).remainder ==
              d.remainder + euclidean_divide(g2, f).remainder);
    }
}

TEST_CASE("truncated division matches the exact one below the cutoff") {
    WeierstrassPolynomial f = to_weierstrass(P("x^2 + y^3"));
    MultiPoly g = P("x^3 + x^3*y");
    TruncatedDivisionResult t = truncated_divide(TruncatedSeries(g, 6), f, 6);
    CHECK(t.quotient.poly() == P("x + x*y"));
    CHECK(t.remainder == P("-x*y^3 - x*y^4"));

    TruncatedDivisionResult z = truncated_divide(TruncatedSeries(MultiPoly::zero(2), 6), f, 6);
    CHECK(z.quotient.poly().is_zero());
    CHECK(z.remainder.is_zero());

    CHECK_THROWS_AS(truncated_divide(TruncatedSeries(g, 3), f, 6), std::invalid_argument);

    Rng rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        int k = rng.uniform(3, 5);
        WeierstrassPolynomial fr = to_weierstrass(rng.weierstrass_input(2, k, 4, 5));
        MultiPoly gr = rng.poly(2, 8, 7, 9);
        int n = 10;
        int prec = std::max(n, gr.total_degree());
        TruncatedDivisionResult td = truncated_divide(TruncatedSeries(gr, prec), fr, n);
        DivisionResult ed = euclidean_divide(gr, fr);
        CHECK(td.quotient.poly() == ed.quotient.truncated(n));
        CHECK(td.remainder == ed.remainder.truncated(n));
    }
}

TEST_CASE("preparation on an already-Weierstrass input is the identity") {
    MultiPoly g = P("x^3 + x*y^2 + y^3");
    PreparationResult prep = weierstrass_prepare(g, 8);
    CHECK(prep.unit.poly() == P("1"));
    CHECK(prep.wpoly.expanded() == g);
}

TEST_CASE("preparation recovers a polynomial unit times Weierstrass factor") {
    MultiPoly g = P("(1 + y)*(x^3 + y*x + y^2)");
    PreparationResult prep = weierstrass_prepare(g, 6);
    CHECK(prep.unit.poly() == P("1 + y"));
    CHECK(prep.wpoly.expanded() == P("x^3 + x*y + y^2"));
    MultiPoly back = g - prep.unit.poly() * prep.wpoly.expanded();
    CHECK((back.is_zero() || *back.total_order() > 6));
}

TEST_CASE("preparation error cases") {
    CHECK_THROWS_AS(weierstrass_prepare(P("y^3"), 6), Error);
    try {
        weierstrass_prepare(P("y^3"), 6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderUndefined);
    }
    try {
        weierstrass_prepare(P("1 + x + y"), 6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFiniteOrder);
    }
}

TEST_CASE("preparation round trip on random unit times Weierstrass products") {
    Rng rng(321);
    const int n = 10;
    for (int trial = 0; trial < 15; ++trial) {
        MultiPoly unit = MultiPoly::constant(2, 1) + rng.poly(2, 4, 3, 3) * P("y") +
                         rng.poly(2, 3, 2, 3) * P("x*y");
        MultiPoly wp = rng.weierstrass_input(2, rng.uniform(1, 4), 4, 4);
        MultiPoly g = unit * wp;
        PreparationResult prep = weierstrass_prepare(g, n);
        MultiPoly residual = g - prep.unit.poly() * prep.wpoly.expanded();
        CHECK((residual.is_zero() || *residual.total_order() > n));
        CHECK(prep.wpoly.expanded().truncated(n) == wp.truncated(n));
        CHECK(prep.unit.constant_term() != 0);
    }
}

TEST_CASE("preparation handles an x-unit factor in the slice") {
    // g(x,0) = x^2(1 + x): the slice is a monomial times an x-unit.
    MultiPoly g = P("(1 + x)*(x^2 + y^3)");
    PreparationResult prep = weierstrass_prepare(g, 8);
    CHECK(prep.wpoly.degree() == 2);
    MultiPoly residual = g - prep.unit.poly() * prep.wpoly.expanded();
    CHECK((residual.is_zero() || *residual.total_order() > 8));
}

TEST_CASE("reducedness detection") {
    CHECK_FALSE(is_reduced(to_weierstrass(P("x^2 - 2*x*y + y^2"))));
    CHECK(is_reduced(to_weierstrass(P("x^3 + x*y^2 + y^3"))));
    CHECK(is_reduced(to_weierstrass(P("x^3 - 6*x^2*y + 11*x*y^2 - 6*y^3"))));
    CHECK(is_reduced(to_weierstrass(P("x^2 + y^3"))));
    CHECK(is_reduced(to_weierstrass(P("x^3 + x*y^2")))); // x*(x^2+y^2), distinct factors
    CHECK_FALSE(is_reduced(to_weierstrass(P("x^4 + 2*x^2*y^3 + y^6")))); // (x^2+y^3)^2
    CHECK(is_reduced(to_weierstrass(P3("x^3 - 2*x^2*y - 2*x^2*z + x*y^2 + 3*x*y*z + x*z^2 - y^2*z - y*z^2"))));
}
