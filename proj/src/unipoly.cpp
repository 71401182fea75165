#include "vft/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace vft {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

Rational UniPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<Rational> r(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r[i] += other.coeffs_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    std::vector<Rational> r(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r[i] -= other.coeffs_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Rational> r(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * other.coeffs_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> r = coeffs_;
    for (auto& c : r) c *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<int>(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return *this * (Rational(1) / leading());
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divide(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rational> rem = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rational> quot(coeffs_.size() - dd, Rational(0));
    Rational lead = divisor.leading();
    for (int i = degree(); i >= dd; --i) {
        Rational c = rem[i] / lead;
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeff(j);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_divide(const UniPoly& divisor) const {
    auto [q, r] = divide(divisor);
    if (!r.is_zero()) throw std::logic_error("exact_divide with nonzero remainder");
    return q;
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divide(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, int>> result;
    if (f.degree() == 0) return result;
    UniPoly g = unipoly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        result.emplace_back(f.monic(), 1);
        return result;
    }
    // Yun's algorithm.
    UniPoly b = f.exact_divide(g).monic();
    UniPoly d = f.derivative().exact_divide(g) - b.derivative();
    for (int mult = 1; b.degree() > 0; ++mult) {
        UniPoly a = unipoly_gcd(b, d);
        if (a.degree() > 0) result.emplace_back(a, mult);
        b = b.exact_divide(a).monic();
        d = d.exact_divide(a) - b.derivative();
    }
    return result;
}

RootCount distinct_complex_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    RootCount rc{0, {}};
    for (const auto& [factor, mult] : squarefree_decompose(f)) {
        rc.distinct += factor.degree();
        rc.multiplicity_profile[mult] += factor.degree();
    }
    return rc;
}

namespace {

// Positive divisors by trial division; gives up on integers past the bound.
std::optional<std::vector<Integer>> divisors(Integer n, const Integer& bound) {
    if (n < 0) n = -n;
    if (n == 0 || n > bound) return std::nullopt;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::optional<std::vector<Rational>> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of zero polynomial");
    std::vector<Rational> roots;
    UniPoly g = f;
    // Strip t = 0 roots first so the constant coefficient is nonzero.
    while (g.degree() > 0 && g.coeff(0) == 0) {
        bool seen = !roots.empty() && roots.front() == 0;
        if (!seen) roots.push_back(Rational(0));
        g = g.exact_divide(UniPoly({Rational(0), Rational(1)}));
    }
    if (g.degree() == 0) return roots;

    // Clear denominators: candidates are num/den with num | a_0 and den | a_n.
    Integer scale(1);
    for (const auto& c : g.coeffs()) scale = lcm(scale, rat_den(c));
    Integer a0 = rat_num(g.coeff(0) * scale);
    Integer an = rat_num(g.leading() * scale);
    const Integer bound = Integer(1000000000000); // trial division stays ~1e6 steps
    auto nums = divisors(a0, bound);
    auto dens = divisors(an, bound);
    if (!nums || !dens) return std::nullopt;
    for (const Integer& den : *dens) {
        for (const Integer& num : *nums) {
            for (int sign : {1, -1}) {
                Rational candidate(sign * num, den);
                if (g.evaluate(candidate) == 0 &&
                    std::find(roots.begin(), roots.end(), candidate) == roots.end())
                    roots.push_back(candidate);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace vft
