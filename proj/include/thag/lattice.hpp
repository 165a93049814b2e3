#pragma once

#include "thag/intpoly.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace thag {

// Explicit ranked lattice of flats. Flats are bitsets over a ground set of at
// most 32 elements, sorted by (rank, mask); the order relation is containment
// of masks. flats[0] is the bottom, flats.back() the top.
struct FlatLattice {
    int ground_size = 0;
    std::vector<std::uint32_t> flats;
    std::vector<int> ranks;

    int size() const { return (int)flats.size(); }
    int top_rank() const { return ranks.empty() ? 0 : ranks.back(); }
    std::uint32_t bottom() const { return flats.front(); }
    std::uint32_t top() const { return flats.back(); }
    int index_of(std::uint32_t mask) const; // -1 when absent
};

// Validates and sorts: unique masks, a unique bottom contained in every flat,
// a unique top containing every flat, ranks strictly monotone under proper
// containment, closure under intersection, and (for lattices up to
// `graded_check_limit` flats) gradedness: covers have rank gap exactly 1.
FlatLattice make_flat_lattice(int ground_size,
                              std::vector<std::pair<std::uint32_t, int>> flats_with_ranks,
                              int graded_check_limit = 400);

// Mobius function mu(a, b) between two flats given by index; errors on an
// incomparable pair.
long long mobius(const FlatLattice& L, int a, int b);

// chi(t) = sum_F mu(bottom, F) t^(top_rank - rank F).
IntPoly characteristic_polynomial(const FlatLattice& L);

// Kazhdan-Lusztig-Stanley engine over one lattice: P and Z of any upper
// interval [F, top], Q of the whole lattice, with interval-level memoization
// keyed by the (bottom mask, top mask) pair.
class KlsEngine {
public:
    explicit KlsEngine(const FlatLattice& L);

    // P of the interval [a_mask, b_mask]: deg P < rank-interval/2, computed by
    // the palindromicity characterization of Z.
    IntPoly kl(std::uint32_t a_mask, std::uint32_t b_mask);
    // Z of the interval: sum over flats z in [a,b] of t^rk(z) P([z,b]).
    IntPoly z_poly(std::uint32_t a_mask, std::uint32_t b_mask);
    // Q of the lower interval [bottom, b_mask] by the signed triangular
    // inversion against P.
    IntPoly inverse_kl(std::uint32_t b_mask);

private:
    struct IntervalKey {
        std::uint32_t a, b;
        auto operator<=>(const IntervalKey&) const = default;
    };
    const FlatLattice& L_;
    std::map<IntervalKey, IntPoly> kl_memo_;
    std::map<std::uint32_t, IntPoly> q_memo_;

    std::vector<int> interval_indices(std::uint32_t a_mask, std::uint32_t b_mask) const;
    int rank_of_mask(std::uint32_t mask) const;
};

// Convenience wrappers over a fresh engine.
// P and Z of the whole lattice; asserts Z palindromic of degree top_rank and
// deg P < top_rank/2 (violation throws: internal inconsistency).
std::pair<IntPoly, IntPoly> kl_and_z(const FlatLattice& L);
IntPoly inverse_kl(const FlatLattice& L);

} // namespace thag
