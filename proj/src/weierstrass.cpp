#include "vft/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vft {

namespace {

MultiPoly x_power(int nvars, int e) {
    std::vector<int> exps(nvars, 0);
    exps[0] = e;
    return MultiPoly::term(Rational(1), std::move(exps));
}

// Terms of p whose ybar-degree (total degree minus x-exponent) is exactly d.
MultiPoly ybar_grade(const MultiPoly& p, int d) {
    MultiPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.total_degree() - m.exponents[0] == d)
            r = r + MultiPoly::term(c, m.exponents);
    }
    return r;
}

// Pseudo-remainder of a by b with respect to x. Requires deg_x b >= 1.
MultiPoly pseudo_remainder_x(MultiPoly a, const MultiPoly& b) {
    int db = b.degree_in_x();
    MultiPoly lc_b = b.coefficient_slice(0, db);
    for (;;) {
        int da = a.degree_in_x();
        if (a.is_zero() || da < db) return a;
        MultiPoly lc_a = a.coefficient_slice(0, da);
        a = a * lc_b - lc_a * x_power(a.nvars(), da - db) * b;
    }
}

} // namespace

WeierstrassPolynomial to_weierstrass(const MultiPoly& p) {
    int k = p.degree_in_x();
    if (k < 1)
        throw Error(ErrorCode::NotMonic,
                    "x-degree is " + std::to_string(k) + "; need a monic polynomial of positive degree in x");
    MultiPoly lead = p.coefficient_slice(0, k);
    if (lead != MultiPoly::constant(p.nvars(), 1))
        throw Error(ErrorCode::NotMonic, "coefficient of x^" + std::to_string(k) + " is not 1");

    WeierstrassPolynomial w;
    w.k_ = k;
    w.nvars_ = p.nvars();
    w.tail_ = MultiPoly::zero(p.nvars());
    for (int i = 0; i < k; ++i) {
        MultiPoly fi = p.coefficient_slice(0, i);
        if (fi.constant_term() != 0)
            throw Error(ErrorCode::NotDistinguished,
                        "F_" + std::to_string(i) + "(0) = " + rat_to_string(fi.constant_term()) +
                            ", must vanish at ybar = 0");
        w.tail_ = w.tail_ + fi * x_power(p.nvars(), i);
        w.coeffs_.push_back(std::move(fi));
    }
    w.expanded_ = p;
    return w;
}

DivisionResult euclidean_divide(const MultiPoly& g, const WeierstrassPolynomial& f) {
    if (g.nvars() != f.nvars())
        throw std::invalid_argument("variable-count mismatch between dividend and divisor");
    const int k = f.degree();
    MultiPoly quotient = MultiPoly::zero(g.nvars());
    MultiPoly rem = g;
    for (;;) {
        int d = rem.degree_in_x();
        if (d < k) break;
        // Cancel the whole top x-slice at once; f is monic so it vanishes exactly.
        MultiPoly top = rem.coefficient_slice(0, d) * x_power(g.nvars(), d - k);
        quotient = quotient + top;
        rem = rem - top * f.expanded();
    }
    return {std::move(quotient), std::move(rem), k};
}

TruncatedDivisionResult truncated_divide(const TruncatedSeries& g, const WeierstrassPolynomial& f,
                                         int N) {
    if (g.nvars() != f.nvars())
        throw std::invalid_argument("variable-count mismatch between dividend and divisor");
    if (g.precision() < N)
        throw std::invalid_argument("precision insufficient: dividend carries " +
                                    std::to_string(g.precision()) + ", requested " +
                                    std::to_string(N));
    const int k = f.degree();
    const int nvars = g.nvars();
    // The iteration moves terms strictly down in x-degree and strictly up in
    // ybar-degree, so the one safe cut is by ybar-degree: a dropped term's
    // descendants all sit above it there, hence above N in total degree too.
    // Cutting by total degree instead would lose high-x terms that still feed
    // back below N.
    auto ybar_cut = [nvars](const MultiPoly& p, int bound) {
        MultiPoly r(nvars);
        for (const auto& [m, c] : p.terms())
            if (m.total_degree() - m.exponents[0] <= bound) r = r + MultiPoly::term(c, m.exponents);
        return r;
    };
    MultiPoly quotient = MultiPoly::zero(nvars);
    MultiPoly rem = MultiPoly::zero(nvars);
    MultiPoly h = ybar_cut(g.poly(), N);
    int rounds = 0;
    while (!h.is_zero()) {
        if (++rounds > N + 2)
            throw std::logic_error("truncated_divide failed to converge");
        MultiPoly above = MultiPoly::zero(nvars);
        for (const auto& [m, c] : h.terms()) {
            if (m.exponents[0] < k) {
                rem = rem + MultiPoly::term(c, m.exponents);
            } else {
                auto e = m.exponents;
                e[0] -= k;
                above = above + MultiPoly::term(c, std::move(e));
            }
        }
        quotient = quotient + above;
        h = ybar_cut(-above * f.tail(), N);
    }
    return {TruncatedSeries(quotient.truncated(N), N), rem.truncated(N), k};
}

PreparationResult weierstrass_prepare(const MultiPoly& g, int N) {
    if (N < 0) throw std::invalid_argument("negative precision");
    const int nvars = g.nvars();
    MultiPoly g0 = ybar_grade(g, 0); // g(x, 0)
    if (g0.is_zero())
        throw Error(ErrorCode::OrderUndefined, "g(x,0) vanishes identically");
    const int k = *g0.order_in_x();
    if (k == 0)
        throw Error(ErrorCode::NotFiniteOrder,
                    "g(x,0) has x-order 0: g is a unit, there is no Weierstrass factor");

    // Degree-0 stratum: u(x,0) = g(x,0)/x^k, an x-unit we can invert.
    std::vector<MultiPoly> u_piece(static_cast<std::size_t>(N) + 1, MultiPoly::zero(nvars));
    std::vector<MultiPoly> p_piece(static_cast<std::size_t>(N) + 1, MultiPoly::zero(nvars));
    u_piece[0] = g0.divided_by_power(0, k);
    p_piece[0] = x_power(nvars, k);
    MultiPoly inv0 = series_invert(TruncatedSeries(u_piece[0], std::max(N, k))).poly();

    // Each ybar-grade d is a triangular solve: u_d x^k + u_0 P_d = rhs_d.
    for (int d = 1; d <= N; ++d) {
        MultiPoly rhs = ybar_grade(g, d);
        for (int a = 1; a < d; ++a) rhs = rhs - u_piece[a] * p_piece[d - a];
        MultiPoly pd = (rhs * inv0).truncated_in(0, k - 1);
        MultiPoly res = rhs - u_piece[0] * pd; // divisible by x^k by construction
        u_piece[d] = res.divided_by_power(0, k).truncated_in(0, N - d);
        p_piece[d] = pd.truncated_in(0, N - d);
    }

    MultiPoly unit_poly = MultiPoly::zero(nvars);
    MultiPoly wpoly = MultiPoly::zero(nvars);
    for (int d = 0; d <= N; ++d) {
        unit_poly = unit_poly + u_piece[d];
        wpoly = wpoly + p_piece[d];
    }
    return {TruncatedSeries(unit_poly.truncated(N), N), to_weierstrass(wpoly), N};
}

bool is_reduced(const WeierstrassPolynomial& f) {
    // gcd(f, df/dx) over Frac(Q[ybar])[x]; leading-coefficient scalings from
    // the pseudo-remainder steps are units there and do not disturb it.
    MultiPoly a = f.expanded();
    MultiPoly b = a.partial_derivative(0);
    for (;;) {
        if (b.is_zero()) return a.degree_in_x() == 0;
        if (b.degree_in_x() == 0) return true;
        MultiPoly r = pseudo_remainder_x(a, b);
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace vft
