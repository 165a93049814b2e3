#pragma once

#include "thag/intpoly.hpp"
#include "thag/schur.hpp"

#include <map>

namespace thag {

// The two alphabets of the ring, plus their formal sum (used by generating
// series and alphabet-parameterized constructors).
enum class Alphabet { X, Y, XY };

// Element of the two-alphabet ring Lambda(X) (x) Lambda(Y) in the basis
// s_lambda[X] s_mu[Y], exact 64-bit coefficients, no stored zeros.
class BiSchurPoly {
public:
    using Terms = std::map<Bipartition, long long>;

    BiSchurPoly() = default;
    static BiSchurPoly one() { return term(Bipartition{}, 1); }
    static BiSchurPoly term(Bipartition shape, long long coeff = 1);

    void add_term(const Bipartition& shape, long long coeff);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<int> homogeneous_degree() const;

    BiSchurPoly& operator+=(const BiSchurPoly& o);
    BiSchurPoly& operator-=(const BiSchurPoly& o);
    friend BiSchurPoly operator+(BiSchurPoly a, const BiSchurPoly& b) { return a += b; }
    friend BiSchurPoly operator-(BiSchurPoly a, const BiSchurPoly& b) { return a -= b; }
    friend BiSchurPoly operator*(const BiSchurPoly& a, const BiSchurPoly& b);
    BiSchurPoly operator*(long long c) const;

    bool operator==(const BiSchurPoly&) const = default;

private:
    Terms terms_;
};

// Product: Littlewood-Richardson independently in each alphabet. Dispatches
// to an OpenMP-parallel kernel for large term counts when enabled; the serial
// implementation is the reference the parallel path must agree with.
BiSchurPoly bi_multiply(const BiSchurPoly& a, const BiSchurPoly& b);
BiSchurPoly bi_multiply_serial(const BiSchurPoly& a, const BiSchurPoly& b);
BiSchurPoly bi_multiply_parallel(const BiSchurPoly& a, const BiSchurPoly& b);

// Embeddings of single-alphabet elements.
BiSchurPoly x_only(const SchurPoly& p);
BiSchurPoly y_only(const SchurPoly& p);

// h_n[X + Y] = sum_{a+b=n} h_a[X] h_b[Y].
BiSchurPoly h_sum_alphabets(int n);
// e_n[X + Y] = sum_{a+b=n} e_a[X] e_b[Y].
BiSchurPoly e_sum_alphabets(int n);
// e_n[2X + Y] = sum_{a+b+c=n} e_a[X] e_b[X] e_c[Y].
BiSchurPoly e_doubled(int n);

// Polynomial in t with BiSchurPoly coefficients; the common value type for
// equivariant Kazhdan-Lusztig, Z and characteristic polynomials. Negative
// t-degrees are rejected.
class GradedBiSchur {
public:
    using Coeffs = std::map<int, BiSchurPoly>;

    GradedBiSchur() = default;
    static GradedBiSchur constant(BiSchurPoly c);
    static GradedBiSchur term(int t_degree, BiSchurPoly c);

    void add_at(int t_degree, const BiSchurPoly& c);
    const BiSchurPoly& coefficient(int t_degree) const; // zero element past range
    const Coeffs& coefficients() const { return coeffs_; }
    int degree() const; // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }

    GradedBiSchur& operator+=(const GradedBiSchur& o);
    GradedBiSchur& operator-=(const GradedBiSchur& o);
    friend GradedBiSchur operator+(GradedBiSchur a, const GradedBiSchur& b) { return a += b; }
    friend GradedBiSchur operator-(GradedBiSchur a, const GradedBiSchur& b) { return a -= b; }
    friend GradedBiSchur operator*(const GradedBiSchur& a, const GradedBiSchur& b);
    GradedBiSchur operator*(long long c) const;
    GradedBiSchur shifted(int dt) const; // multiply by t^dt, dt >= 0

    bool operator==(const GradedBiSchur&) const = default;

private:
    Coeffs coeffs_;
};

// Specializes every s_lambda[X] s_mu[Y] of total size n to
// binomial(n, |lambda|) * f^lambda * f^mu. All nonzero coefficients must be
// homogeneous of one common total degree; anything else is malformed here.
IntPoly dimension_poly(const GradedBiSchur& g);

// True when coefficient(k) == coefficient(r - k) for all k.
bool is_palindromic(const GradedBiSchur& g, int r);

// Complete homogeneous function on the twisted alphabet (t-1)X - Y, via the
// subtraction rule h_n[E-F] = sum_j (-1)^(n-j) h_j[E] e_(n-j)[F] and
//   h_j[(t-1)X] = sum_b (-1)^(j-b) t^b h_b[X] e_(j-b)[X],
// e.g. h_1[(t-1)X - Y] = t s_(1)[X] - s_(1)[X] - s_(1)[Y]. Building block of
// the equivariant characteristic polynomial.
GradedBiSchur h_twisted(int n);

} // namespace thag
