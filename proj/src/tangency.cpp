#include "vft/tangency.hpp"

#include <stdexcept>
#include <string>

namespace vft {

VectorField VectorField::x_power_d_dx(int nvars, int r) {
    if (r < 0) throw std::invalid_argument("negative power in vector field");
    std::vector<int> e(nvars, 0);
    e[0] = r;
    std::vector<MultiPoly> comps(nvars, MultiPoly::zero(nvars));
    comps[0] = MultiPoly::term(Rational(1), std::move(e));
    return {std::move(comps)};
}

TangencyReport tangency_function(const WeierstrassPolynomial& f, const VectorField& X) {
    if (static_cast<int>(X.components.size()) != f.nvars())
        throw std::invalid_argument("vector field component count does not match variable count");
    MultiPoly dfx = MultiPoly::zero(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        if (X.components[i].is_zero()) continue;
        dfx = dfx + X.components[i] * f.expanded().partial_derivative(i);
    }
    DivisionResult div = euclidean_divide(dfx, f);
    Order order = div.remainder.order_in_x();
    return {std::nullopt, std::move(div.remainder), order};
}

TangencyReport tangency_remainder_xr(const WeierstrassPolynomial& f, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    TangencyReport report = tangency_function(f, VectorField::x_power_d_dx(f.nvars(), r));
    report.r = r;
    return report;
}

CriterionVerdict criterion_sweep(const WeierstrassPolynomial& f) {
    if (!is_reduced(f))
        throw Error(ErrorCode::NotReduced, "f has a repeated factor");
    if (f.degree() <= 2)
        throw Error(ErrorCode::MultiplicityTooLow,
                    "k = " + std::to_string(f.degree()) + "; the criterion requires k > 2");
    if (f.contains_x_axis())
        throw Error(ErrorCode::ContainsXAxis, "F_0 = 0: the hypersurface contains x = 0");

    CriterionVerdict verdict;
    verdict.k = f.degree();
    verdict.claims_reducible = false;
    // Evaluate every r even after a witness so reports carry the full profile.
    for (int r = 2; r < f.degree(); ++r) {
        Order order = tangency_remainder_xr(f, r).order;
        verdict.per_r.emplace(r, order);
        if (order == Order(0) && !verdict.witness_r) {
            verdict.claims_reducible = true;
            verdict.witness_r = r;
        }
    }
    return verdict;
}

} // namespace vft
