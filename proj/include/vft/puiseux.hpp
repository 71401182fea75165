// Ground truth for plane-curve germs: count the branches of f = 0 at the
// origin by Newton polygon recursion.
//
// Each compact edge of the polygon carries a univariate edge polynomial.
// Simple roots contribute one branch each. A repeated root is chased by the
// substitution x -> y^q (c + x), but only when the edge has p = 1 and the
// root is rational; anything that would need algebraic-number arithmetic
// comes back INCONCLUSIVE rather than a guessed count. A germ is reducible
// exactly when it has at least two branches.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vft/unipoly.hpp"
#include "vft/weierstrass.hpp"

namespace vft {

struct PolygonEdge {
    // Endpoints (i1, j1) -> (i0, j0) with i1 > i0; i is the x-exponent.
    int i1, j1, i0, j0;
};

struct NewtonPolygon {
    std::vector<std::pair<int, int>> support; // all (i, j) with nonzero coefficient
    std::vector<PolygonEdge> edges;           // compact lower-hull edges, decreasing i
};

struct EdgeData {
    PolygonEdge edge;
    int p, q;    // coprime: p*(j0 - j1) = q*(i1 - i0); Puiseux slope q/p
    UniPoly phi; // sum over edge lattice points of a_ij t^((i - i0)/p)
};

enum class OracleStatus { Exact, Inconclusive };

struct OracleVerdict {
    std::optional<long> branches; // empty = UNKNOWN (only when Inconclusive)
    OracleStatus status;
    std::vector<std::string> notes; // recursion trace

    bool exact() const { return status == OracleStatus::Exact; }
    // Only meaningful when exact.
    bool reducible() const { return branches && *branches >= 2; }
};

std::string oracle_status_name(OracleStatus status);

// Lower convex hull of the support. Requires nvars = 2 (WrongArity) and
// F_0 != 0 (ContainsXAxis).
NewtonPolygon newton_polygon(const WeierstrassPolynomial& f);

// Edge polynomial of an edge of the polygon of f (f given expanded).
EdgeData edge_polynomial(const PolygonEdge& e, const MultiPoly& f);

// Branch count with an explicit recursion budget; exceeding the budget is
// INCONCLUSIVE, never an error and never a wrong count.
OracleVerdict branch_count(const WeierstrassPolynomial& f, int depth_budget);

// branch_count with the default budget.
OracleVerdict oracle_verdict(const WeierstrassPolynomial& f);

} // namespace vft
