#include "thag/thagomizer.hpp"

#include "thag/ints.hpp"

#include <numeric>
#include <stdexcept>

namespace thag {

namespace {

void check_guard(int n, int lo, int max_n, const char* who) {
    if (n < lo)
        throw std::invalid_argument(std::string(who) + ": n below valid range");
    if (n > max_n)
        throw std::invalid_argument(std::string(who) + ": n above size guard");
}

constexpr std::uint32_t spine_bit = 1u;
std::uint32_t a_bit(int i) { return 1u << (2 * i - 1); }
std::uint32_t b_bit(int i) { return 1u << (2 * i); }

} // namespace

FlatLattice flats_of_thagomizer(int n, int max_n) {
    check_guard(n, 0, max_n, "flats_of_thagomizer");
    if (2 * n + 1 > 32)
        throw std::invalid_argument("flats_of_thagomizer: ground set exceeds 32 bits");
    std::vector<std::pair<std::uint32_t, int>> flats;

    // Type a: choose per spike none / a_i / b_i; rank = number chosen.
    long long total_a = 1;
    for (int i = 0; i < n; ++i) total_a *= 3;
    for (long long code = 0; code < total_a; ++code) {
        long long c = code;
        std::uint32_t mask = 0;
        int rank = 0;
        for (int i = 1; i <= n; ++i, c /= 3) {
            int choice = (int)(c % 3);
            if (choice == 1) { mask |= a_bit(i); ++rank; }
            else if (choice == 2) { mask |= b_bit(i); ++rank; }
        }
        flats.emplace_back(mask, rank);
    }
    // Type b: spine plus both edges of each spike in S; rank |S| + 1.
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        std::uint32_t mask = spine_bit;
        int rank = 1;
        for (int i = 1; i <= n; ++i)
            if (S & (1u << (i - 1))) { mask |= a_bit(i) | b_bit(i); ++rank; }
        flats.emplace_back(mask, rank);
    }
    return make_flat_lattice(2 * n + 1, std::move(flats));
}

FlatLattice flats_of_cycle(int n, int max_n) {
    check_guard(n, 2, max_n, "flats_of_cycle");
    std::vector<std::pair<std::uint32_t, int>> flats;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        int size = __builtin_popcount(S);
        if (size <= n - 2) flats.emplace_back(S, size);
    }
    flats.emplace_back((1u << n) - 1, n - 1);
    return make_flat_lattice(n, std::move(flats));
}

std::vector<FlatOrbitDescriptor> orbit_decomposition(int n) {
    if (n < 0) throw std::invalid_argument("orbit_decomposition: negative n");
    long long group_order = checked_mul(factorial(n), 1LL << n); // |C_2 wr S_n|
    std::vector<FlatOrbitDescriptor> out;
    for (int k = 0; k <= n; ++k) {
        FlatOrbitDescriptor d;
        d.kind = OrbitKind::TypeI;
        d.k = k;
        d.rank = k;
        d.contraction = ContractionKind::Thagomizer;
        d.contraction_size = n - k;
        d.induction_weight = h_sum_alphabets(k);
        // stabilizer of {a_1..a_k}: permute spikes 1..k (no flips there),
        // anything on the rest: k! * 2^(n-k) (n-k)!.
        d.stabilizer_order =
            checked_mul(factorial(k), checked_mul(1LL << (n - k), factorial(n - k)));
        d.orbit_size = group_order / d.stabilizer_order;
        out.push_back(std::move(d));
    }
    for (int k = 0; k <= n; ++k) {
        FlatOrbitDescriptor d;
        d.kind = OrbitKind::TypeII;
        d.k = k;
        d.rank = k + 1;
        d.contraction = ContractionKind::Boolean;
        d.contraction_size = n - k;
        d.induction_weight = x_only(h_gen(k) * h_gen(n - k));
        // stabilizer of spine + spikes 1..k: full hyperoctahedral action on
        // both blocks: 2^k k! * 2^(n-k) (n-k)!.
        d.stabilizer_order =
            checked_mul(checked_mul(1LL << k, factorial(k)),
                        checked_mul(1LL << (n - k), factorial(n - k)));
        d.orbit_size = group_order / d.stabilizer_order;
        out.push_back(std::move(d));
    }
    return out;
}

std::uint32_t apply_signed_perm(const SignedPerm& g, std::uint32_t mask, int n) {
    if ((int)g.image.size() != n + 1 || (int)g.flip.size() != n + 1)
        throw std::invalid_argument("apply_signed_perm: wrong arity");
    std::uint32_t out = mask & spine_bit;
    for (int i = 1; i <= n; ++i) {
        bool has_a = mask & a_bit(i);
        bool has_b = mask & b_bit(i);
        if (g.flip[(size_t)i]) std::swap(has_a, has_b);
        int j = g.image[(size_t)i];
        if (j < 1 || j > n) throw std::invalid_argument("apply_signed_perm: bad image");
        if (has_a) out |= a_bit(j);
        if (has_b) out |= b_bit(j);
    }
    return out;
}

SignedPerm carrying_element(std::uint32_t mask, int n) {
    SignedPerm g;
    g.image.assign((size_t)n + 1, 0);
    g.flip.assign((size_t)n + 1, false);
    int next = 1;
    std::vector<int> untouched;
    if (mask & spine_bit) {
        // Type b: spikes fully inside the flat go to the front, unflipped.
        for (int i = 1; i <= n; ++i) {
            bool has_a = mask & a_bit(i), has_b = mask & b_bit(i);
            if (has_a != has_b)
                throw std::invalid_argument("carrying_element: not a flat");
            if (has_a) g.image[(size_t)i] = next++;
            else untouched.push_back(i);
        }
    } else {
        // Type a: spikes contributing one edge go to the front; b-edges are
        // flipped into a-edges.
        for (int i = 1; i <= n; ++i) {
            bool has_a = mask & a_bit(i), has_b = mask & b_bit(i);
            if (has_a && has_b)
                throw std::invalid_argument("carrying_element: not a flat");
            if (has_a || has_b) {
                g.image[(size_t)i] = next++;
                g.flip[(size_t)i] = has_b;
            } else {
                untouched.push_back(i);
            }
        }
    }
    for (int i : untouched) g.image[(size_t)i] = next++;
    return g;
}

} // namespace thag
