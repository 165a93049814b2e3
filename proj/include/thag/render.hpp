#pragma once

#include "thag/bischur.hpp"
#include "thag/intpoly.hpp"

#include <string>

namespace thag {

// Plain-text rendering, e.g. "s[2;] + t*s[;2]": one term per coefficient
// entry, comma-separated partition parts around a semicolon, t-power before
// the s-symbol, unit coefficients omitted, "0" for the zero element. Term
// order is canonical: t ascending, then bipartitions by descending
// (lambda, mu).
std::string to_text(const GradedBiSchur& g);

// LaTeX rendering in the V_{lambda,mu} convention with \varnothing for the
// empty partition, e.g. "V_{(2),\\varnothing} + t V_{\\varnothing,(2)}".
// Same term order as to_text.
std::string to_latex(const GradedBiSchur& g);

std::string to_text(const IntPoly& p);
std::string to_latex(const IntPoly& p);

} // namespace thag
