#pragma once

#include "thag/bischur.hpp"

#include <map>

namespace thag {

// Power series in u truncated at a fixed u-order, whose u^m cell is a Laurent
// polynomial in t with BiSchurPoly coefficients (negative t-degrees are legal
// here, unlike in GradedBiSchur -- the t -> 1/t substitution needs them).
// All arithmetic silently discards u-degrees above the truncation order;
// binary operations require both operands to share one order.
class TruncatedBiSeries {
public:
    using Cell = std::map<int, BiSchurPoly>; // t-degree -> coefficient
    using Cells = std::map<int, Cell>;       // u-degree -> cell

    explicit TruncatedBiSeries(int order);
    int order() const { return order_; }

    void add_cell(int u_degree, int t_degree, const BiSchurPoly& c);
    const BiSchurPoly& coefficient(int u_degree, int t_degree) const;
    const Cells& cells() const { return cells_; }
    bool is_zero() const { return cells_.empty(); }

    TruncatedBiSeries& operator+=(const TruncatedBiSeries& o);
    TruncatedBiSeries& operator-=(const TruncatedBiSeries& o);
    friend TruncatedBiSeries operator+(TruncatedBiSeries a, const TruncatedBiSeries& b) {
        return a += b;
    }
    friend TruncatedBiSeries operator-(TruncatedBiSeries a, const TruncatedBiSeries& b) {
        return a -= b;
    }

    bool operator==(const TruncatedBiSeries&) const = default;

private:
    int order_ = 0;
    Cells cells_;
};

// Cauchy product, truncated to the common order.
TruncatedBiSeries series_multiply(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

// The substitution (t, u) -> (t^{-1}, tu): the cell at (u^m, t^d) moves to
// (u^m, t^(m-d)). An involution on truncated series.
TruncatedBiSeries series_substitute(const TruncatedBiSeries& a);

bool series_equal(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

// Multiply by t^dt u^du (du >= 0); cells pushed past the order are dropped.
TruncatedBiSeries series_shift(const TruncatedBiSeries& a, int dt, int du);

TruncatedBiSeries series_scale(const TruncatedBiSeries& a, long long c);

// Place a polynomial-in-t value at a single u-degree.
TruncatedBiSeries series_from_graded(const GradedBiSchur& g, int u_degree, int order);

TruncatedBiSeries series_one(int order);

// Generating series of complete homogeneous functions: the u^m cell is
// h_m[A] (at t-degree m when t_coupled, i.e. the series in the variable tu;
// at t-degree 0 otherwise).
TruncatedBiSeries h_series(Alphabet a, bool t_coupled, int order);

// Same for elementary functions; used by series sanity checks.
TruncatedBiSeries e_series(Alphabet a, bool t_coupled, int order);

} // namespace thag
