// Power series truncated by total degree: terms of total degree <= precision
// are exact, everything above is unspecified and never stored.
#pragma once

#include "vft/multipoly.hpp"

namespace vft {

class TruncatedSeries {
public:
    TruncatedSeries(MultiPoly poly, int precision);

    static TruncatedSeries one(int nvars, int precision) {
        return TruncatedSeries(MultiPoly::constant(nvars, 1), precision);
    }

    const MultiPoly& poly() const { return poly_; }
    int precision() const { return precision_; }
    int nvars() const { return poly_.nvars(); }
    bool is_zero() const { return poly_.is_zero(); }
    Rational constant_term() const { return poly_.constant_term(); }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

    bool operator==(const TruncatedSeries& other) const {
        return precision_ == other.precision_ && poly_ == other.poly_;
    }

private:
    MultiPoly poly_;
    int precision_;
};

// Multiplicative inverse up to the input's precision. The input must be a
// unit: its constant term must be nonzero.
TruncatedSeries series_invert(const TruncatedSeries& u);

} // namespace vft
