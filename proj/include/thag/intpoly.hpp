#pragma once

#include <string>
#include <vector>

namespace thag {

// Dense univariate polynomial in t over exact 64-bit integers, ascending
// coefficient order, trailing zeros trimmed. degree() of the zero polynomial
// is -1 by convention.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> ascending_coeffs);
    explicit IntPoly(std::vector<long long> ascending_coeffs);
    static IntPoly monomial(int k, long long c = 1);
    static IntPoly constant(long long c) { return monomial(0, c); }

    long long coeff(int k) const;
    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator*(long long c) const;
    IntPoly shifted(int k) const; // multiply by t^k, k >= 0

    long long eval(long long t) const; // checked

    bool operator==(const IntPoly&) const = default;

private:
    void trim();
    std::vector<long long> coeffs_;
};

// True when p(t) = t^r * p(1/t), i.e. coeff(k) == coeff(r-k) for all k
// (with coefficients beyond the stored range read as zero).
bool is_palindromic(const IntPoly& p, int r);

std::string to_string(const IntPoly& p); // e.g. "2 - 3*t + t^2"; "0" for zero

} // namespace thag
