// Shared test helpers: parsing shorthands, random generators, and the
// independent oracles (point evaluation, exhaustive hull checking) that the
// implementation-path results are checked against.
#pragma once

#include <random>
#include <vector>

#include "vft/expr.hpp"
#include "vft/multipoly.hpp"
#include "vft/puiseux.hpp"

namespace vft_test {

inline const vft::VariableContext& ctx2() {
    static vft::VariableContext ctx({"x", "y"});
    return ctx;
}

inline const vft::VariableContext& ctx3() {
    static vft::VariableContext ctx({"x", "y", "z"});
    return ctx;
}

inline vft::MultiPoly P(const std::string& text) { return vft::parse_poly(text, ctx2()); }
inline vft::MultiPoly P3(const std::string& text) { return vft::parse_poly(text, ctx3()); }

// Independent of the term-map arithmetic: plain per-term evaluation. Two
// polynomials that agree at enough random points are equal with overwhelming
// probability; used as a second route for identities.
inline vft::Rational eval_at(const vft::MultiPoly& p, const std::vector<vft::Rational>& point) {
    vft::Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        vft::Rational term = c;
        for (int i = 0; i < p.nvars(); ++i)
            for (int e = 0; e < m.exponents[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    vft::Rational rational(int bound) {
        int num = uniform(-bound, bound);
        int den = uniform(1, bound);
        return vft::Rational(num, den);
    }

    std::vector<vft::Rational> point(int nvars, int bound) {
        std::vector<vft::Rational> pt;
        for (int i = 0; i < nvars; ++i) pt.push_back(rational(bound));
        return pt;
    }

    vft::MultiPoly poly(int nvars, int max_terms, int max_deg, int coeff_bound) {
        vft::MultiPoly p(nvars);
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> exps(nvars);
            for (int i = 0; i < nvars; ++i) exps[i] = uniform(0, max_deg);
            p = p + vft::MultiPoly::term(vft::Rational(uniform(-coeff_bound, coeff_bound)), exps);
        }
        return p;
    }

    // Random Weierstrass polynomial: monic of x-degree k, every lower
    // coefficient a ybar-polynomial vanishing at 0 (possibly zero), F_0 != 0.
    vft::MultiPoly weierstrass_input(int nvars, int k, int max_deg, int coeff_bound) {
        std::vector<int> head(nvars, 0);
        head[0] = k;
        vft::MultiPoly p = vft::MultiPoly::term(vft::Rational(1), head);
        for (int i = 0; i < k; ++i) {
            vft::MultiPoly fi(nvars);
            int terms = (i == 0) ? uniform(1, 3) : uniform(0, 3);
            for (int t = 0; t < terms; ++t) {
                std::vector<int> exps(nvars, 0);
                exps[0] = i;
                int deg = 0;
                for (int v = 1; v < nvars; ++v) {
                    exps[v] = uniform(0, max_deg);
                    deg += exps[v];
                }
                if (deg == 0) exps[1] = 1; // keep F_i(0) = 0
                int c = uniform(-coeff_bound, coeff_bound);
                if (i == 0 && t == 0 && c == 0) c = 1;
                fi = fi + vft::MultiPoly::term(vft::Rational(c), exps);
            }
            if (i == 0 && fi.is_zero()) fi = vft::MultiPoly::variable(nvars, 1); // F_0 != 0
            p = p + fi;
        }
        return p;
    }
};

// Exhaustive check that a polygon is the honest lower hull: every support
// point on or above every edge's supporting line, endpoints in the support,
// edges chained in order of decreasing i.
inline bool polygon_is_lower_hull(const vft::NewtonPolygon& np) {
    if (np.edges.empty()) return false;
    for (const auto& e : np.edges) {
        if (e.i1 <= e.i0) return false;
        bool saw1 = false, saw0 = false;
        for (const auto& [i, j] : np.support) {
            long lhs = static_cast<long>(i - e.i0) * (e.j1 - e.j0) -
                       static_cast<long>(j - e.j0) * (e.i1 - e.i0);
            // Points below the supporting line would have been hull points.
            if (lhs > 0) return false;
            if (i == e.i1 && j == e.j1) saw1 = true;
            if (i == e.i0 && j == e.j0) saw0 = true;
        }
        if (!saw1 || !saw0) return false;
    }
    for (std::size_t i = 1; i < np.edges.size(); ++i)
        if (np.edges[i].i1 != np.edges[i - 1].i0 || np.edges[i].j1 != np.edges[i - 1].j0)
            return false;
    return true;
}

} // namespace vft_test
