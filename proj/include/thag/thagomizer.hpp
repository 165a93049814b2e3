#pragma once

#include "thag/bischur.hpp"
#include "thag/lattice.hpp"

#include <cstdint>
#include <vector>

namespace thag {

// Lattice of flats of the thagomizer matroid T_n: the graphic matroid of
// K_{1,1,n}, rank n+1 on 2n+1 elements. Ground-set labels: spine edge at
// index 0, spike i edges at indices 2i-1 (a_i) and 2i (b_i), i = 1..n.
// Flats are (a) unions of a_I and b_J for disjoint I, J subset [n], with rank
// |I|+|J|, and (b) spine plus both edges of each spike in S, rank |S|+1.
// Default guard n <= 8 (3^8 + 2^8 = 6817 flats); callers may widen it
// explicitly.
FlatLattice flats_of_thagomizer(int n, int max_n = 8);

// Lattice of flats of the cycle matroid C_n = U_{n-1,n}: all subsets of size
// <= n-2 plus the full set at rank n-1. Requires n >= 2; guard n <= 10.
FlatLattice flats_of_cycle(int n, int max_n = 10);

enum class OrbitKind { TypeI, TypeII };
enum class ContractionKind { Thagomizer, Boolean };

// One hyperoctahedral orbit of flats of T_n. Type I: representative
// {a_1..a_k}, rank k, contraction another thagomizer T_(n-k), induction
// weight h_k[X+Y]. Type II: representative spine + spikes 1..k, rank k+1,
// Boolean contraction of size n-k, weight h_k[X] h_(n-k)[X] expanded.
struct FlatOrbitDescriptor {
    OrbitKind kind = OrbitKind::TypeI;
    int k = 0;    // spike count of the representative
    int rank = 0; // k for TypeI, k+1 for TypeII
    ContractionKind contraction = ContractionKind::Thagomizer;
    int contraction_size = 0; // n - k
    BiSchurPoly induction_weight;
    long long stabilizer_order = 0;
    long long orbit_size = 0;
};

// The 2(n+1) orbit descriptors of the B_n-action on flats of T_n, Type I for
// k = 0..n then Type II for k = 0..n.
std::vector<FlatOrbitDescriptor> orbit_decomposition(int n);

// Signed permutation of the n spikes: spike i is sent to spike image[i],
// swapping its two edges when flip[i] is set. The a/b labels within spike i
// sit at ground indices 2i-1 and 2i.
struct SignedPerm {
    // Both vectors have length n + 1 and are indexed by spike number 1..n;
    // slot 0 is unused so the code can match the 1-based math convention.
    std::vector<int> image;    // spike i is relabeled to image[i]
    std::vector<bool> flip;    // flip[i] swaps a_i and b_i before relabeling
};

// Action on a flat given as an edge mask.
std::uint32_t apply_signed_perm(const SignedPerm& g, std::uint32_t mask, int n);

// For a Type-a flat (mask without the spine), a group element carrying it to
// the orbit representative {a_1, ..., a_k}; for a Type-b flat, one carrying
// it to spine + spikes 1..k. Demonstrates constructive orbit membership.
SignedPerm carrying_element(std::uint32_t mask, int n);

} // namespace thag
