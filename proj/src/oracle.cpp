#include "thag/oracle.hpp"

#include "thag/thagomizer.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace thag {

namespace {

void check_range(int n, int lo, int hi, const char* who) {
    if (n < lo || n > hi)
        throw std::invalid_argument(std::string(who) + ": n out of guarded range");
}

// Extract P from rest(t) by palindromicity of Z = P + rest at degree r:
// P_i = rest_(r-i) - rest_i for 0 <= i < r/2, then verify.
GradedBiSchur extract_by_palindromicity(const GradedBiSchur& rest, int r,
                                        const char* who) {
    GradedBiSchur p;
    for (int i = 0; 2 * i < r; ++i) {
        BiSchurPoly c = rest.coefficient(r - i);
        c -= rest.coefficient(i);
        p.add_at(i, c);
    }
    GradedBiSchur z = p + rest;
    if (!is_palindromic(z, r) || 2 * p.degree() >= r)
        throw std::logic_error(std::string(who) +
                               ": palindromic extraction failed (internal bug)");
    return p;
}

} // namespace

GradedBiSchur p_thagomizer_oracle(int n, int max_n) {
    check_range(n, 0, max_n, "p_thagomizer_oracle");
    std::vector<std::optional<GradedBiSchur>> memo((size_t)n + 1);
    auto compute = [&memo](auto&& self, int m) -> const GradedBiSchur& {
        if (memo[(size_t)m]) return *memo[(size_t)m];
        GradedBiSchur rest;
        for (const FlatOrbitDescriptor& d : orbit_decomposition(m)) {
            if (d.kind == OrbitKind::TypeI) {
                if (d.k == 0) continue; // the bottom flat: contributes P itself
                GradedBiSchur w = GradedBiSchur::constant(d.induction_weight);
                rest += (w * self(self, d.contraction_size)).shifted(d.rank);
            } else {
                // Boolean contraction has trivial KL polynomial.
                rest.add_at(d.rank, d.induction_weight);
            }
        }
        memo[(size_t)m] =
            extract_by_palindromicity(rest, m + 1, "p_thagomizer_oracle");
        return *memo[(size_t)m];
    };
    return compute(compute, n);
}

GradedBiSchur p_cycle_oracle(int k, int max_k) {
    check_range(k, 2, max_k, "p_cycle_oracle");
    std::vector<std::optional<GradedBiSchur>> memo((size_t)k + 1);
    auto compute = [&memo](auto&& self, int m) -> const GradedBiSchur& {
        if (memo[(size_t)m]) return *memo[(size_t)m];
        GradedBiSchur rest = GradedBiSchur::term(m - 1, y_only(h_gen(m)));
        for (int j = 1; j <= m - 2; ++j) {
            GradedBiSchur w = GradedBiSchur::constant(y_only(h_gen(j)));
            rest += (w * self(self, m - j)).shifted(j);
        }
        memo[(size_t)m] = extract_by_palindromicity(rest, m - 1, "p_cycle_oracle");
        return *memo[(size_t)m];
    };
    return compute(compute, k);
}

GradedBiSchur q_thagomizer_oracle(int n, int max_n) {
    check_range(n, 0, max_n, "q_thagomizer_oracle");
    std::vector<GradedBiSchur> p((size_t)n + 1), q;
    for (int m = 0; m <= n; ++m) p[(size_t)m] = p_thagomizer_oracle(m, max_n);
    for (int m = 0; m <= n; ++m) {
        // rhs = sum_k (-1)^k e_k[X+Y] P_(m-k); lhs partial sum over k < m.
        GradedBiSchur rhs, partial;
        for (int k = 0; k <= m; ++k) {
            GradedBiSchur e = GradedBiSchur::constant(e_sum_alphabets(k));
            GradedBiSchur term = e * p[(size_t)(m - k)];
            rhs += (k % 2 == 0) ? term : term * -1;
        }
        for (int k = 0; k < m; ++k) {
            GradedBiSchur h = GradedBiSchur::constant(x_only(h_gen(m - k)));
            GradedBiSchur term = h * q[(size_t)k];
            partial += (k % 2 == 0) ? term : term * -1;
        }
        GradedBiSchur qm = rhs - partial;
        q.push_back((m % 2 == 0) ? std::move(qm) : qm * -1);
    }
    return q.back();
}

} // namespace thag
