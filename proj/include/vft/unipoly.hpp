// Dense univariate polynomials over Q: the coefficient arithmetic behind the
// branch-counting oracle. Squarefree structure over Q decides "distinct
// complex roots" questions exactly, without ever computing a root.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vft/rational.hpp"

namespace vft {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs); // coeffs[i] multiplies t^i

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

    UniPoly derivative() const;
    UniPoly monic() const;
    Rational evaluate(const Rational& t) const;

    // Field division: returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divide(const UniPoly& divisor) const;
    // Division asserting a zero remainder.
    UniPoly exact_divide(const UniPoly& divisor) const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Monic gcd over Q; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly unipoly_gcd(UniPoly a, UniPoly b);

// Yun decomposition f = c * prod factor^multiplicity with the factors
// squarefree, pairwise coprime and monic. Multiplicities ascend.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f);

struct RootCount {
    int distinct; // number of distinct complex roots
    std::map<int, int> multiplicity_profile; // multiplicity -> how many distinct roots carry it
};

// deg f - deg gcd(f, f') bookkeeping via the squarefree decomposition.
RootCount distinct_complex_roots(const UniPoly& f);

// All rational roots (each listed once). Empty optional when the divisor
// enumeration would need to factor integers beyond the search bound; callers
// must treat that as "don't know", never as "none".
std::optional<std::vector<Rational>> rational_roots(const UniPoly& f);

} // namespace vft
