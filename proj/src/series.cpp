#include "thag/series.hpp"

#include <stdexcept>

namespace thag {

TruncatedBiSeries::TruncatedBiSeries(int order) : order_(order) {
    if (order < 0)
        throw std::invalid_argument("TruncatedBiSeries: negative order");
}

void TruncatedBiSeries::add_cell(int u_degree, int t_degree, const BiSchurPoly& c) {
    if (u_degree < 0)
        throw std::invalid_argument("TruncatedBiSeries: negative u-degree");
    if (u_degree > order_ || c.is_zero()) return;
    auto& cell = cells_[u_degree];
    auto it = cell.find(t_degree);
    if (it == cell.end()) {
        cell.emplace(t_degree, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) cell.erase(it);
    }
    if (cell.empty()) cells_.erase(u_degree);
}

const BiSchurPoly& TruncatedBiSeries::coefficient(int u_degree, int t_degree) const {
    static const BiSchurPoly zero;
    auto it = cells_.find(u_degree);
    if (it == cells_.end()) return zero;
    auto jt = it->second.find(t_degree);
    return jt == it->second.end() ? zero : jt->second;
}

namespace {

void check_orders(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncatedBiSeries: mismatched truncation orders");
}

} // namespace

TruncatedBiSeries& TruncatedBiSeries::operator+=(const TruncatedBiSeries& o) {
    check_orders(*this, o);
    for (const auto& [u, cell] : o.cells_)
        for (const auto& [t, c] : cell) add_cell(u, t, c);
    return *this;
}

TruncatedBiSeries& TruncatedBiSeries::operator-=(const TruncatedBiSeries& o) {
    check_orders(*this, o);
    for (const auto& [u, cell] : o.cells_)
        for (const auto& [t, c] : cell) add_cell(u, t, c * -1);
    return *this;
}

TruncatedBiSeries series_multiply(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    check_orders(a, b);
    TruncatedBiSeries out(a.order());
    for (const auto& [ua, cella] : a.cells()) {
        for (const auto& [ub, cellb] : b.cells()) {
            if (ua + ub > a.order()) continue;
            for (const auto& [ta, ca] : cella)
                for (const auto& [tb, cb] : cellb)
                    out.add_cell(ua + ub, ta + tb, ca * cb);
        }
    }
    return out;
}

TruncatedBiSeries series_substitute(const TruncatedBiSeries& a) {
    TruncatedBiSeries out(a.order());
    for (const auto& [u, cell] : a.cells())
        for (const auto& [t, c] : cell) out.add_cell(u, u - t, c);
    return out;
}

bool series_equal(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    return a == b;
}

TruncatedBiSeries series_shift(const TruncatedBiSeries& a, int dt, int du) {
    if (du < 0)
        throw std::invalid_argument("series_shift: negative u-shift");
    TruncatedBiSeries out(a.order());
    for (const auto& [u, cell] : a.cells())
        for (const auto& [t, c] : cell) out.add_cell(u + du, t + dt, c);
    return out;
}

TruncatedBiSeries series_scale(const TruncatedBiSeries& a, long long k) {
    TruncatedBiSeries out(a.order());
    for (const auto& [u, cell] : a.cells())
        for (const auto& [t, c] : cell) out.add_cell(u, t, c * k);
    return out;
}

TruncatedBiSeries series_from_graded(const GradedBiSchur& g, int u_degree, int order) {
    TruncatedBiSeries out(order);
    for (const auto& [t, c] : g.coefficients()) out.add_cell(u_degree, t, c);
    return out;
}

TruncatedBiSeries series_one(int order) {
    TruncatedBiSeries out(order);
    out.add_cell(0, 0, BiSchurPoly::one());
    return out;
}

namespace {

BiSchurPoly h_of(Alphabet a, int m) {
    switch (a) {
    case Alphabet::X: return x_only(h_gen(m));
    case Alphabet::Y: return y_only(h_gen(m));
    case Alphabet::XY: return h_sum_alphabets(m);
    }
    throw std::logic_error("h_of: bad alphabet");
}

BiSchurPoly e_of(Alphabet a, int m) {
    switch (a) {
    case Alphabet::X: return x_only(e_gen(m));
    case Alphabet::Y: return y_only(e_gen(m));
    case Alphabet::XY: return e_sum_alphabets(m);
    }
    throw std::logic_error("e_of: bad alphabet");
}

} // namespace

TruncatedBiSeries h_series(Alphabet a, bool t_coupled, int order) {
    TruncatedBiSeries out(order);
    for (int m = 0; m <= order; ++m) out.add_cell(m, t_coupled ? m : 0, h_of(a, m));
    return out;
}

TruncatedBiSeries e_series(Alphabet a, bool t_coupled, int order) {
    TruncatedBiSeries out(order);
    for (int m = 0; m <= order; ++m) out.add_cell(m, t_coupled ? m : 0, e_of(a, m));
    return out;
}

} // namespace thag
