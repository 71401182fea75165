// Sparse multivariate polynomials over Q in canonical form.
//
// Variable index 0 is the distinguished variable (called x throughout); the
// remaining indices are the parameter block. Terms live in a map ordered by
// graded lex, which makes equality structural and printing deterministic.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vft/rational.hpp"

namespace vft {

struct Monomial {
    std::vector<int> exponents; // fixed length = nvars of the owning polynomial

    int total_degree() const {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }

    bool operator==(const Monomial& other) const { return exponents == other.exponents; }
};

// Graded lexicographic: lower total degree first, ties by exponent vector.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.exponents < b.exponents;
    }
};

// The order of the zero polynomial is infinite, never a number.
using Order = std::optional<int>;
inline constexpr Order kOrderInfinite = std::nullopt;

std::string order_to_string(const Order& o);

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    explicit MultiPoly(int nvars = 1) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int var_index);
    // x^e0 * y1^e1 * ... with the given coefficient
    static MultiPoly term(const Rational& coeff, std::vector<int> exponents);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const;
    // Coefficient of the all-zero monomial.
    Rational constant_term() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator*(const Rational& scalar) const;
    bool operator==(const MultiPoly& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    MultiPoly pow(int exponent) const;

    MultiPoly partial_derivative(int var_index) const;

    // Smallest exponent of the given variable over all terms; infinite if zero.
    Order order_in(int var_index) const;
    Order order_in_x() const { return order_in(0); }
    // Minimum total degree over all terms; infinite if zero.
    Order total_order() const;

    // Largest exponent of the given variable; -1 for the zero polynomial.
    int degree_in(int var_index) const;
    int degree_in_x() const { return degree_in(0); }
    int total_degree() const; // -1 for zero

    // Terms whose var_index exponent equals e, with that exponent removed.
    MultiPoly coefficient_slice(int var_index, int e) const;
    // Exact composition p[var_index := replacement].
    MultiPoly substitute(int var_index, const MultiPoly& replacement) const;
    // Exact division by var^e; requires order_in(var_index) >= e.
    MultiPoly divided_by_power(int var_index, int e) const;
    // Drop every term of total degree > bound.
    MultiPoly truncated(int bound) const;
    // Drop every term whose var_index exponent exceeds bound.
    MultiPoly truncated_in(int var_index, int bound) const;

private:
    void add_term(const Monomial& m, const Rational& c); // maintains canonical form
    void check_same_shape(const MultiPoly& other) const;

    int nvars_;
    TermMap terms_;

    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

} // namespace vft
