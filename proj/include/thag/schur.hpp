#pragma once

#include "thag/partition.hpp"

#include <map>
#include <optional>

namespace thag {

// Element of the ring of symmetric functions in one alphabet, stored in the
// Schur basis with exact 64-bit integer coefficients. Zero coefficients are
// never stored.
class SchurPoly {
public:
    using Terms = std::map<Partition, long long>;

    SchurPoly() = default;
    static SchurPoly one() { return term(Partition{}, 1); }
    static SchurPoly term(Partition shape, long long coeff = 1);

    void add_term(const Partition& shape, long long coeff);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Common degree of all terms if homogeneous (0 for the zero element),
    // nullopt if terms of different degrees are mixed.
    std::optional<int> homogeneous_degree() const;

    SchurPoly& operator+=(const SchurPoly& o);
    SchurPoly& operator-=(const SchurPoly& o);
    friend SchurPoly operator+(SchurPoly a, const SchurPoly& b) { return a += b; }
    friend SchurPoly operator-(SchurPoly a, const SchurPoly& b) { return a -= b; }
    friend SchurPoly operator*(const SchurPoly& a, const SchurPoly& b);
    SchurPoly operator*(long long c) const;

    bool operator==(const SchurPoly&) const = default;

private:
    Terms terms_;
};

// Product in the Schur basis via direct enumeration of Littlewood-Richardson
// tableaux (label-by-label horizontal-strip growth with an incremental ballot
// check). Single-pair expansions are memoized.
SchurPoly schur_multiply(const SchurPoly& a, const SchurPoly& b);

// Structure constant c^c_{a,b} = [s_c] s_a * s_b.
long long lr_coefficient(const Partition& a, const Partition& b, const Partition& c);

// Memoized expansion of s_a * s_b as a coefficient map.
const SchurPoly::Terms& lr_expand_pair(const Partition& a, const Partition& b);

SchurPoly h_gen(int n); // complete homogeneous h_n = s_(n)
SchurPoly e_gen(int n); // elementary e_n = s_(1^n)

} // namespace thag
