#include <doctest.h>

#include "support.hpp"
#include "vft/tangency.hpp"

using namespace vft;
using namespace vft_test;

TEST_CASE("tangency of x^2 d/dx with the counterexample cubic") {
    WeierstrassPolynomial f = to_weierstrass(P("x^3 + x*y^2 + y^3"));
    VectorField X{{P("x^2"), MultiPoly::zero(2)}};
    TangencyReport rep = tangency_function(f, X);
    CHECK(rep.remainder == P("-2*x^2*y^2 - 3*x*y^3"));
    CHECK(rep.order == Order(1));
    CHECK_FALSE(rep.r.has_value());
}

TEST_CASE("tangency of the zero field is infinite") {
    WeierstrassPolynomial f = to_weierstrass(P("x^3 + x*y^2 + y^3"));
    VectorField zero{{MultiPoly::zero(2), MultiPoly::zero(2)}};
    TangencyReport rep = tangency_function(f, zero);
    CHECK(rep.remainder.is_zero());
    CHECK(rep.order == kOrderInfinite);
}

TEST_CASE("tangency with a cusp") {
    WeierstrassPolynomial f = to_weierstrass(P("x^3 - y^4"));
    VectorField X{{P("x^2"), MultiPoly::zero(2)}};
    CHECK(tangency_function(f, X).remainder == P("3*x*y^4"));
    CHECK(tangency_function(f, X).order == Order(1));
}

TEST_CASE("x^r specialization worked examples") {
    WeierstrassPolynomial lines = to_weierstrass(P("x^3 - 6*x^2*y + 11*x*y^2 - 6*y^3"));
    TangencyReport rep = tangency_remainder_xr(lines, 2);
    CHECK(rep.remainder == P("14*x^2*y^2 - 48*x*y^3 + 36*y^4"));
    CHECK(rep.order == Order(0));
    CHECK(rep.r == 2);

    CHECK(tangency_remainder_xr(to_weierstrass(P("x^3 + x*y^2 + y^3")), 2).order == Order(1));
    CHECK(tangency_remainder_xr(to_weierstrass(P("x^3 - y^4")), 2).order == Order(1));

    // k = 2 is fine here; only the sweep insists on k > 2.
    TangencyReport low = tangency_remainder_xr(to_weierstrass(P("x^2 + y^3")), 2);
    CHECK(low.remainder == P("-2*x*y^3"));
    CHECK(low.order == Order(1));

    CHECK_THROWS_AS(tangency_remainder_xr(lines, 0), std::invalid_argument);
}

TEST_CASE("general field with x^r components equals the specialization") {
    Rng rng(5522);
    for (int trial = 0; trial < 30; ++trial) {
        WeierstrassPolynomial f = to_weierstrass(rng.weierstrass_input(2, rng.uniform(2, 5), 4, 5));
        int r = rng.uniform(1, 4);
        VectorField X = VectorField::x_power_d_dx(2, r);
        TangencyReport a = tangency_function(f, X);
        TangencyReport b = tangency_remainder_xr(f, r);
        CHECK(a.remainder == b.remainder);
        CHECK(a.order == b.order);
    }
}

TEST_CASE("tangency remainder is additive in the vector field") {
    Rng rng(9001);
    for (int trial = 0; trial < 30; ++trial) {
        WeierstrassPolynomial f = to_weierstrass(rng.weierstrass_input(2, rng.uniform(2, 4), 3, 4));
        VectorField X1{{rng.poly(2, 3, 3, 4), rng.poly(2, 3, 3, 4)}};
        VectorField X2{{rng.poly(2, 3, 3, 4), rng.poly(2, 3, 3, 4)}};
        VectorField sum{{X1.components[0] + X2.components[0],
                         X1.components[1] + X2.components[1]}};
        CHECK(tangency_function(f, sum).remainder ==
              tangency_function(f, X1).remainder + tangency_function(f, X2).remainder);
    }
}

TEST_CASE("criterion sweep on the two decisive cubics") {
    CriterionVerdict miss = criterion_sweep(to_weierstrass(P("x^3 + x*y^2 + y^3")));
    CHECK(miss.k == 3);
    CHECK(miss.per_r.size() == 1);
    CHECK(miss.per_r.at(2) == Order(1));
    CHECK_FALSE(miss.claims_reducible);
    CHECK_FALSE(miss.witness_r.has_value());

    CriterionVerdict hit = criterion_sweep(to_weierstrass(P("x^3 - 6*x^2*y + 11*x*y^2 - 6*y^3")));
    CHECK(hit.per_r.at(2) == Order(0));
    CHECK(hit.claims_reducible);
    CHECK(hit.witness_r == 2);
}

TEST_CASE("criterion sweep evaluates the whole r-range") {
    // (x^2+y^3)(x^3+y^4): order 1 at r=2, first zero at r=3.
    CriterionVerdict v = criterion_sweep(to_weierstrass(P("x^5 + x^3*y^3 + x^2*y^4 + y^7")));
    CHECK(v.per_r.size() == 3);
    CHECK(v.per_r.at(2) == Order(1));
    CHECK(v.per_r.at(3) == Order(0));
    CHECK(v.claims_reducible);
    CHECK(v.witness_r == 3);
}

TEST_CASE("criterion hypothesis gating") {
    auto expect_code = [](const MultiPoly& p, ErrorCode code) {
        try {
            criterion_sweep(to_weierstrass(p));
            FAIL("expected rejection");
        } catch (const Error& e) {
            CHECK(e.code() == code);
        }
    };
    expect_code(P("x^2 + y^3"), ErrorCode::MultiplicityTooLow);
    expect_code(P("x^3 + x*y^2"), ErrorCode::ContainsXAxis);
    expect_code(P("x^2 - 2*x*y + y^2"), ErrorCode::NotReduced);
}
