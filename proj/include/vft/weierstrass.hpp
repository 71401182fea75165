// Weierstrass-form validation, division with remainder of bounded x-degree,
// and constructive Weierstrass preparation.
//
// A Weierstrass polynomial is x^k + F_{k-1}(ybar) x^{k-1} + ... + F_0(ybar)
// with every F_i vanishing at ybar = 0. Because it is monic in x, dividing by
// it is ordinary Euclidean division in (Q[ybar])[x]: exact, unique, and with
// remainder of x-degree below k. The truncated variant and the preparation
// exist for series-style inputs and for normalizing arbitrary polynomials of
// finite x-order into this form.
#pragma once

#include <vector>

#include "vft/error.hpp"
#include "vft/multipoly.hpp"
#include "vft/series.hpp"

namespace vft {

class WeierstrassPolynomial {
public:
    int degree() const { return k_; }
    int nvars() const { return nvars_; }
    // F_i for 0 <= i < k; stored with x-exponent zero everywhere.
    const MultiPoly& coefficient(int i) const { return coeffs_.at(i); }
    // x^k + sum F_i x^i as a plain polynomial.
    const MultiPoly& expanded() const { return expanded_; }
    // sum_{i<k} F_i x^i (everything below the monic head).
    const MultiPoly& tail() const { return tail_; }
    // F_0 == 0 means x divides the polynomial, i.e. the zero set contains x = 0.
    bool contains_x_axis() const { return coeffs_[0].is_zero(); }

private:
    friend WeierstrassPolynomial to_weierstrass(const MultiPoly& p);
    WeierstrassPolynomial() = default;

    int k_ = 0;
    int nvars_ = 0;
    std::vector<MultiPoly> coeffs_;
    MultiPoly expanded_{1};
    MultiPoly tail_{1};
};

// Validates p and wraps it. Throws Error with code NotMonic when p is not
// monic in x of positive degree, NotDistinguished when some F_i(0) != 0.
WeierstrassPolynomial to_weierstrass(const MultiPoly& p);

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
    int divisor_degree;
};

struct TruncatedDivisionResult {
    TruncatedSeries quotient;
    MultiPoly remainder;
    int divisor_degree;
};

// Exact division g = Q*f + R with deg_x R < deg f. Always succeeds.
DivisionResult euclidean_divide(const MultiPoly& g, const WeierstrassPolynomial& f);

// Series division through total degree N: total_order(g - Q*f - R) > N.
// On polynomial input this agrees with euclidean_divide on every term of
// total degree <= N. Requires g.precision() >= N.
TruncatedDivisionResult truncated_divide(const TruncatedSeries& g, const WeierstrassPolynomial& f,
                                         int N);

struct PreparationResult {
    TruncatedSeries unit;
    WeierstrassPolynomial wpoly;
    int precision;
};

// Factors g = unit * wpoly through total degree N, where k = x-order of
// g(x, 0). Errors: OrderUndefined when g(x,0) vanishes identically,
// NotFiniteOrder when that slice is a unit already (x-order 0).
PreparationResult weierstrass_prepare(const MultiPoly& g, int N);

// Squarefree test in x over the fraction field of Q[ybar], via a pseudo-
// remainder sequence for gcd(f, df/dx). Detects repeated factors.
bool is_reduced(const WeierstrassPolynomial& f);

} // namespace vft
