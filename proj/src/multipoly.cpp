#include "vft/multipoly.hpp"

#include <stdexcept>
#include <string>

namespace vft {

std::string order_to_string(const Order& o) {
    return o ? std::to_string(*o) : std::string("INFINITE");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial{std::vector<int>(nvars, 0)}, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var_index) {
    if (var_index < 0 || var_index >= nvars)
        throw std::invalid_argument("variable index out of range");
    std::vector<int> e(nvars, 0);
    e[var_index] = 1;
    return term(Rational(1), std::move(e));
}

MultiPoly MultiPoly::term(const Rational& coeff, std::vector<int> exponents) {
    MultiPoly p(static_cast<int>(exponents.size()));
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (coeff != 0) p.terms_.emplace(Monomial{std::move(exponents)}, coeff);
    return p;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const {
    return coeff(Monomial{std::vector<int>(nvars_, 0)});
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same_shape(const MultiPoly& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(nvars_) +
                                    " vs " + std::to_string(other.nvars_));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    check_same_shape(other);
    MultiPoly r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    check_same_shape(other);
    MultiPoly r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    check_same_shape(other);
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m = ma;
            for (int i = 0; i < nvars_; ++i) m.exponents[i] += mb.exponents[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
    MultiPoly r(nvars_);
    if (scalar == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
    return r;
}

MultiPoly MultiPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    MultiPoly acc = constant(nvars_, 1);
    for (int i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::partial_derivative(int var_index) const {
    if (var_index < 0 || var_index >= nvars_)
        throw std::invalid_argument("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponents[var_index];
        if (e == 0) continue;
        Monomial d = m;
        d.exponents[var_index] = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

Order MultiPoly::order_in(int var_index) const {
    if (terms_.empty()) return kOrderInfinite;
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int e = m.exponents[var_index];
        if (best < 0 || e < best) best = e;
    }
    return best;
}

Order MultiPoly::total_order() const {
    if (terms_.empty()) return kOrderInfinite;
    return terms_.begin()->first.total_degree(); // map is graded
}

int MultiPoly::degree_in(int var_index) const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, m.exponents[var_index]);
    return best;
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
}

MultiPoly MultiPoly::coefficient_slice(int var_index, int e) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exponents[var_index] != e) continue;
        Monomial s = m;
        s.exponents[var_index] = 0;
        r.terms_.emplace(s, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(int var_index, const MultiPoly& replacement) const {
    if (var_index < 0 || var_index >= nvars_)
        throw std::invalid_argument("variable index out of range");
    check_same_shape(replacement);
    // Powers of the replacement are shared across terms.
    std::vector<MultiPoly> powers{constant(nvars_, 1)};
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponents[var_index];
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * replacement);
        Monomial rest = m;
        rest.exponents[var_index] = 0;
        MultiPoly piece = powers[e] * c;
        for (const auto& [pm, pc] : piece.terms_) {
            Monomial combined = pm;
            for (int i = 0; i < nvars_; ++i) combined.exponents[i] += rest.exponents[i];
            r.add_term(combined, pc);
        }
    }
    return r;
}

MultiPoly MultiPoly::divided_by_power(int var_index, int e) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exponents[var_index] < e)
            throw std::invalid_argument("not divisible by variable power");
        Monomial s = m;
        s.exponents[var_index] -= e;
        r.terms_.emplace(s, c);
    }
    return r;
}

MultiPoly MultiPoly::truncated(int bound) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() > bound) break; // graded order: all later terms are bigger
        r.terms_.emplace(m, c);
    }
    return r;
}

MultiPoly MultiPoly::truncated_in(int var_index, int bound) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.exponents[var_index] <= bound) r.terms_.emplace(m, c);
    return r;
}

} // namespace vft
