// Tangency of a vector field with a hypersurface germ, and the reducibility
// criterion built on it.
//
// For X = a d/dx + sum b_i d/dy_i, the tangency function of X with f = 0 is
// the remainder R of the Weierstrass division of df(X) = a f_x + sum b_i f_{y_i}
// by f; the tangency order is the x-order of R. The criterion sweeps the
// fields x^r d/dx for 2 <= r < k and claims f reducible exactly when some
// sweep member has tangency order 0. The harness treats that claim as a
// hypothesis to be checked, not as a fact.
#pragma once

#include <map>
#include <optional>

#include "vft/weierstrass.hpp"

namespace vft {

struct VectorField {
    // components[0] multiplies d/dx, components[i] multiplies d/dy_i.
    std::vector<MultiPoly> components;

    static VectorField x_power_d_dx(int nvars, int r);
};

struct TangencyReport {
    std::optional<int> r; // set when the field is x^r d/dx, empty for general X
    MultiPoly remainder;
    Order order;
};

struct CriterionVerdict {
    int k;
    std::map<int, Order> per_r; // tangency order for each r in [2, k)
    bool claims_reducible;      // true iff some order is 0
    std::optional<int> witness_r; // least r with order 0
};

TangencyReport tangency_function(const WeierstrassPolynomial& f, const VectorField& X);

// Specialization to X = x^r d/dx: remainder of x^r * df/dx modulo f.
TangencyReport tangency_remainder_xr(const WeierstrassPolynomial& f, int r);

// Hypothesis gates, in the order the named errors are reported:
// NotReduced, then MultiplicityTooLow (k <= 2), then ContainsXAxis (F_0 = 0).
CriterionVerdict criterion_sweep(const WeierstrassPolynomial& f);

} // namespace vft
