#pragma once

#include "thag/bischur.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thag {

// Offending entry of a positivity / multiplicity scan, reported in canonical
// display order (t ascending, bipartitions by descending (lambda, mu)).
struct PositivityWitness {
    int t_degree = 0;
    Bipartition shape;
    long long coeff = 0;
};

// First negative coefficient, if any.
std::optional<PositivityWitness> schur_negative_witness(const GradedBiSchur& g);
// All stored coefficients >= 1 (vacuously true for zero).
bool is_schur_positive(const GradedBiSchur& g);

// First coefficient outside {0, 1}, if any.
std::optional<PositivityWitness> multiplicity_witness(const GradedBiSchur& g);
bool is_multiplicity_free(const GradedBiSchur& g);

enum class IlcVariant { P, Q };

// The induced log-concavity difference of t-coefficients of the chosen
// equivariant family of T_n: C_i * C_j - C_(i-1) * C_(j+1), where C_k is the
// t^k coefficient (zero past the top degree). Requires 1 <= i <= j.
BiSchurPoly ilc_difference(int n, int i, int j, IlcVariant variant = IlcVariant::P);

struct IlcEntry {
    int n = 0, i = 0, j = 0;
    IlcVariant variant = IlcVariant::P;
    bool positive = false;
    std::optional<PositivityWitness> witness; // set on failure
    // "counterexample" when the failure survives recomputation through the
    // independent recursion; "implementation-error" when it does not.
    std::string classification;
};

struct IlcReport {
    int max_n = 0;
    IlcVariant variant = IlcVariant::P;
    bool strong = true;
    std::vector<IlcEntry> entries; // sorted by (n, i, j)
    int failures = 0;
};

// Sweeps every n <= max_n and 1 <= i <= j <= floor(n/2) (strong) or i == j
// only (weak), evaluating ilc_difference and Schur positivity. Any failure is
// re-derived through the recursion oracle before classification. The sweep is
// OpenMP-parallel with a deterministic, index-ordered report. Guard
// max_n <= 10.
IlcReport verify_strong_ilc(int max_n, IlcVariant variant);
IlcReport verify_ilc(int max_n, IlcVariant variant, bool strong);

} // namespace thag
