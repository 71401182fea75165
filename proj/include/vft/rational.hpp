// Exact rational coefficients. Everything in this project computes over Q;
// there is no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace vft {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational keeps lowest terms and a positive denominator by construction;
// these helpers exist so callers and tests never touch the backend directly.
inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline std::string rat_to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

} // namespace vft
