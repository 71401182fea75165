#include "vft/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace vft {

TruncatedSeries::TruncatedSeries(MultiPoly poly, int precision)
    : poly_(poly.truncated(precision)), precision_(precision) {
    if (precision < 0) throw std::invalid_argument("negative series precision");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    int n = std::min(precision_, other.precision_);
    return TruncatedSeries(poly_ + other.poly_, n);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    int n = std::min(precision_, other.precision_);
    return TruncatedSeries(poly_ - other.poly_, n);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    int n = std::min(precision_, other.precision_);
    return TruncatedSeries(poly_ * other.poly_, n);
}

TruncatedSeries series_invert(const TruncatedSeries& u) {
    Rational c = u.constant_term();
    if (c == 0) throw std::invalid_argument("series_invert: constant term is zero (not a unit)");
    int n = u.precision();
    int nvars = u.nvars();
    // u = c(1 - w) with total_order(w) >= 1, so 1/u = (1 + w + ... + w^n)/c.
    MultiPoly w = (MultiPoly::constant(nvars, c) - u.poly()) * (Rational(1) / c);
    MultiPoly sum = MultiPoly::constant(nvars, 1);
    MultiPoly wpow = MultiPoly::constant(nvars, 1);
    for (int i = 1; i <= n; ++i) {
        wpow = (wpow * w).truncated(n);
        if (wpow.is_zero()) break;
        sum = sum + wpow;
    }
    return TruncatedSeries(sum * (Rational(1) / c), n);
}

} // namespace vft
