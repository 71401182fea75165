#include "vft/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vft {

namespace {

constexpr int kDefaultDepthBudget = 16;

std::vector<std::pair<int, int>> support_of(const MultiPoly& p) {
    std::vector<std::pair<int, int>> pts;
    for (const auto& [m, c] : p.terms()) pts.emplace_back(m.exponents[0], m.exponents[1]);
    std::sort(pts.begin(), pts.end());
    return pts;
}

long cross(const std::pair<int, int>& o, const std::pair<int, int>& a,
           const std::pair<int, int>& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
}

// Lower hull of the support of a bivariate polynomial with x ∤ p is computed
// from the per-i minima; edges come back in order of decreasing i.
NewtonPolygon polygon_of(const MultiPoly& p) {
    NewtonPolygon np;
    np.support = support_of(p);
    std::map<int, int> min_j;
    for (const auto& [i, j] : np.support) {
        auto it = min_j.find(i);
        if (it == min_j.end() || j < it->second) min_j[i] = j;
    }
    std::vector<std::pair<int, int>> pts(min_j.begin(), min_j.end()); // i ascending
    std::vector<std::pair<int, int>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    for (std::size_t s = hull.size(); s >= 2; --s) {
        const auto& right = hull[s - 1];
        const auto& left = hull[s - 2];
        np.edges.push_back({right.first, right.second, left.first, left.second});
    }
    return np;
}

std::string point_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string edge_str(const PolygonEdge& e) {
    return point_str(e.i1, e.j1) + "-" + point_str(e.i0, e.j0);
}

class BranchCounter {
public:
    explicit BranchCounter(std::vector<std::string>& notes) : notes_(notes) {}

    // Branches of h = 0 through the origin; empty when inconclusive.
    std::optional<long> count(const MultiPoly& h, int budget, int depth) {
        if (budget < 0) {
            note(depth, "recursion budget exhausted");
            return std::nullopt;
        }
        MultiPoly work = h;
        long total = 0;

        int x_mult = work.order_in(0).value_or(0);
        if (x_mult > 0) {
            // An exact x = 0 factor is one smooth branch; twice would mean a
            // repeated factor, which reduced inputs cannot produce.
            if (x_mult >= 2) throw Error(ErrorCode::NotReduced, "x^2 divides a residual germ");
            total += 1;
            note(depth, "exact branch: x divides the residual once");
            work = work.divided_by_power(0, x_mult);
        }
        if (work.order_in(1).value_or(0) > 0)
            throw std::logic_error("residual germ divisible by y; valuation bookkeeping is off");
        if (work.constant_term() != 0) return total; // unit: nothing more through 0

        NewtonPolygon np = polygon_of(work);
        for (const PolygonEdge& e : np.edges) {
            EdgeData ed = edge_polynomial(e, work);
            auto sub = count_edge(work, ed, budget, depth);
            if (!sub) return std::nullopt;
            total += *sub;
        }
        return total;
    }

private:
    std::optional<long> count_edge(const MultiPoly& h, const EdgeData& ed, int budget,
                                   int depth) {
        long total = 0;
        for (const auto& [factor, mult] : squarefree_decompose(ed.phi)) {
            if (mult == 1) {
                total += factor.degree();
                note(depth, "edge " + edge_str(ed.edge) + ": " + std::to_string(factor.degree()) +
                                " simple root(s), one branch each");
                continue;
            }
            if (ed.p != 1) {
                note(depth, "edge " + edge_str(ed.edge) + ": repeated root on a p = " +
                                std::to_string(ed.p) +
                                " edge needs algebraic Puiseux coefficients");
                return std::nullopt;
            }
            auto roots = rational_roots(factor);
            if (!roots || static_cast<int>(roots->size()) < factor.degree()) {
                note(depth, "edge " + edge_str(ed.edge) +
                                ": repeated root is irrational (or out of search bounds)");
                return std::nullopt;
            }
            for (const Rational& c : *roots) {
                note(depth, "edge " + edge_str(ed.edge) + ": rational root " + rat_to_string(c) +
                                " of multiplicity " + std::to_string(mult) + ", recursing");
                auto sub = count(recentered(h, ed, c), budget - 1, depth + 1);
                if (!sub) return std::nullopt;
                total += *sub;
            }
        }
        return total;
    }

    // h(y^q (c + x), y) / y^w for a p = 1 edge, where w = q*i + j on the edge.
    static MultiPoly recentered(const MultiPoly& h, const EdgeData& ed, const Rational& c) {
        const int w = ed.q * ed.edge.i1 + ed.edge.j1;
        std::vector<int> yq(2, 0);
        yq[1] = ed.q;
        MultiPoly replacement =
            (MultiPoly::variable(2, 0) + MultiPoly::constant(2, c)) * MultiPoly::term(Rational(1), yq);
        return h.substitute(0, replacement).divided_by_power(1, w);
    }

    void note(int depth, const std::string& text) {
        notes_.push_back(std::string(static_cast<std::size_t>(depth) * 2, ' ') + text);
    }

    std::vector<std::string>& notes_;
};

} // namespace

std::string oracle_status_name(OracleStatus status) {
    return status == OracleStatus::Exact ? "EXACT" : "INCONCLUSIVE";
}

NewtonPolygon newton_polygon(const WeierstrassPolynomial& f) {
    if (f.nvars() != 2)
        throw Error(ErrorCode::WrongArity,
                    "Newton polygon needs a plane curve; got " + std::to_string(f.nvars()) +
                        " variables");
    if (f.contains_x_axis())
        throw Error(ErrorCode::ContainsXAxis, "F_0 = 0: no vertex on the j-axis");
    return polygon_of(f.expanded());
}

EdgeData edge_polynomial(const PolygonEdge& e, const MultiPoly& f) {
    const int di = e.i1 - e.i0;
    const int dj = e.j0 - e.j1;
    if (di <= 0 || dj <= 0) throw std::invalid_argument("degenerate polygon edge");
    const int g = std::gcd(di, dj);
    EdgeData ed{e, di / g, dj / g, UniPoly()};
    std::vector<Rational> coeffs(static_cast<std::size_t>(di / ed.p) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) {
        const int i = m.exponents[0], j = m.exponents[1];
        // On the supporting line through the endpoints?
        if (static_cast<long>(i - e.i0) * (e.j1 - e.j0) != static_cast<long>(j - e.j0) * (e.i1 - e.i0))
            continue;
        if (i < e.i0 || i > e.i1) continue;
        coeffs[static_cast<std::size_t>((i - e.i0) / ed.p)] = c;
    }
    ed.phi = UniPoly(std::move(coeffs));
    return ed;
}

OracleVerdict branch_count(const WeierstrassPolynomial& f, int depth_budget) {
    if (f.nvars() != 2)
        throw Error(ErrorCode::WrongArity, "branch counting needs a plane curve; got " +
                                               std::to_string(f.nvars()) + " variables");
    if (!is_reduced(f)) throw Error(ErrorCode::NotReduced, "f has a repeated factor");
    if (f.contains_x_axis())
        throw Error(ErrorCode::ContainsXAxis, "F_0 = 0: the germ contains x = 0");

    OracleVerdict verdict;
    auto branches = BranchCounter(verdict.notes).count(f.expanded(), depth_budget, 0);
    verdict.branches = branches;
    verdict.status = branches ? OracleStatus::Exact : OracleStatus::Inconclusive;
    return verdict;
}

OracleVerdict oracle_verdict(const WeierstrassPolynomial& f) {
    return branch_count(f, kDefaultDepthBudget);
}

} // namespace vft
