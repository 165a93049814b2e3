#include "thag/closed_forms.hpp"

#include "thag/positivity.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace thag;

namespace {

BiSchurPoly vxy(std::vector<int> x, std::vector<int> y) {
    return BiSchurPoly::term({Partition(std::move(x)), Partition(std::move(y))});
}

} // namespace

TEST_CASE("thagomizer kl closed form at small index") {
    CHECK(p_thagomizer(0) == GradedBiSchur::constant(BiSchurPoly::one()));
    CHECK(p_thagomizer(1) == GradedBiSchur::constant(vxy({1}, {})));

    GradedBiSchur p2;
    p2.add_at(0, vxy({2}, {}));
    p2.add_at(1, vxy({}, {2}));
    CHECK(p_thagomizer(2) == p2);

    GradedBiSchur p3;
    p3.add_at(0, vxy({3}, {}));
    p3.add_at(1, vxy({1}, {2}) + vxy({}, {3}));
    CHECK(p_thagomizer(3) == p3);

    GradedBiSchur p4;
    p4.add_at(0, vxy({4}, {}));
    p4.add_at(1, vxy({2}, {2}) + vxy({1}, {3}) + vxy({}, {4}));
    p4.add_at(2, vxy({}, {2, 2}));
    CHECK(p_thagomizer(4) == p4);

    CHECK_THROWS_AS(p_thagomizer(-1), std::invalid_argument);
}

TEST_CASE("thagomizer inverse kl closed form at small index") {
    CHECK(q_thagomizer(0) == GradedBiSchur::constant(BiSchurPoly::one()));
    CHECK(q_thagomizer(1) == GradedBiSchur::constant(vxy({1}, {}) + vxy({}, {1})));

    GradedBiSchur q2;
    q2.add_at(0, vxy({1, 1}, {}) + vxy({1}, {1}) + vxy({}, {1, 1}));
    q2.add_at(1, vxy({}, {2}));
    CHECK(q_thagomizer(2) == q2);

    GradedBiSchur q3;
    q3.add_at(0, vxy({1, 1, 1}, {}) + vxy({1, 1}, {1}) + vxy({1}, {1, 1}) + vxy({}, {1, 1, 1}));
    q3.add_at(1, vxy({1}, {2}) + vxy({}, {2, 1}));
    CHECK(q_thagomizer(3) == q3);

    CHECK_THROWS_AS(q_thagomizer(-1), std::invalid_argument);
}

TEST_CASE("cycle kl closed form") {
    CHECK(c_cycle(0).is_zero());
    CHECK(c_cycle(1).is_zero());
    CHECK(c_cycle(2) == GradedBiSchur::constant(vxy({}, {2})));

    GradedBiSchur c4;
    c4.add_at(0, vxy({}, {4}));
    c4.add_at(1, vxy({}, {2, 2}));
    CHECK(c_cycle(4) == c4);

    GradedBiSchur c5;
    c5.add_at(0, vxy({}, {5}));
    c5.add_at(1, vxy({}, {3, 2}));
    CHECK(c_cycle(5) == c5);

    GradedBiSchur c6x;
    c6x.add_at(0, vxy({6}, {}));
    c6x.add_at(1, vxy({4, 2}, {}));
    c6x.add_at(2, vxy({2, 2, 2}, {}));
    CHECK(c_cycle(6, Alphabet::X) == c6x);

    CHECK_THROWS_AS(c_cycle(-1), std::invalid_argument);
    CHECK_THROWS_AS(c_cycle(4, Alphabet::XY), std::invalid_argument);
}

TEST_CASE("cycle z polynomial") {
    GradedBiSchur z2;
    z2.add_at(0, vxy({}, {2}));
    z2.add_at(1, vxy({}, {2}));
    CHECK(z_cycle(2) == z2);

    GradedBiSchur z3;
    z3.add_at(0, vxy({}, {3}));
    z3.add_at(1, vxy({}, {3}) + vxy({}, {2, 1}));
    z3.add_at(2, vxy({}, {3}));
    CHECK(z_cycle(3) == z3);

    for (int k = 2; k <= 10; ++k) {
        GradedBiSchur z = z_cycle(k);
        CHECK(is_palindromic(z, k - 1));
        CHECK(z.degree() == k - 1);
    }
    CHECK_THROWS_AS(z_cycle(1), std::invalid_argument);
}

TEST_CASE("thagomizer z polynomial") {
    GradedBiSchur z0;
    z0.add_at(0, BiSchurPoly::one());
    z0.add_at(1, BiSchurPoly::one());
    CHECK(z_thagomizer(0) == z0);

    GradedBiSchur z1;
    z1.add_at(0, vxy({1}, {}));
    z1.add_at(1, vxy({1}, {}) * 2 + vxy({}, {1}));
    z1.add_at(2, vxy({1}, {}));
    CHECK(z_thagomizer(1) == z1);
    CHECK(dimension_poly(z_thagomizer(1)) == IntPoly{1, 3, 1});

    for (int n = 0; n <= 8; ++n) {
        GradedBiSchur z = z_thagomizer(n);
        CHECK(is_palindromic(z, n + 1));
        CHECK(z.degree() == n + 1);
    }

    // The pluggable variant reproduces the default when fed the closed form.
    auto closed = [](int m) { return p_thagomizer(m); };
    for (int n = 0; n <= 6; ++n) CHECK(z_thagomizer(n, closed) == z_thagomizer(n));
}

TEST_CASE("inverse kl from the signed kl convolution") {
    for (int n = 0; n <= 6; ++n) CHECK(q_from_p(n) == q_thagomizer(n));
}

TEST_CASE("alternating pieri sum collapses to a single schur function") {
    CHECK(pieri_alternating_lhs(0, 1) == SchurPoly::term(Partition({2})));
    CHECK(pieri_alternating_lhs(1, 1) == SchurPoly::term(Partition({2, 1})));
    CHECK(pieri_alternating_lhs(2, 2) == SchurPoly::term(Partition({2, 2, 1, 1})));
    CHECK(pieri_alternating_lhs(0, 3) == SchurPoly::term(Partition({2, 2, 2})));
    for (int m = 0; m <= 5; ++m) {
        for (int k = 1; k <= 4; ++k) {
            std::vector<int> parts((size_t)k, 2);
            parts.insert(parts.end(), (size_t)m, 1);
            CHECK(pieri_alternating_lhs(m, k) == SchurPoly::term(Partition(parts)));
        }
    }
    CHECK_THROWS_AS(pieri_alternating_lhs(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(pieri_alternating_lhs(0, 0), std::invalid_argument);
}

TEST_CASE("characteristic polynomial closed form") {
    GradedBiSchur chi0;
    chi0.add_at(0, BiSchurPoly::one() * -1);
    chi0.add_at(1, BiSchurPoly::one());
    CHECK(char_poly_thagomizer(0) == chi0);

    GradedBiSchur chi1;
    chi1.add_at(0, vxy({1}, {}) + vxy({}, {1}));
    chi1.add_at(1, vxy({1}, {}) * -2 + vxy({}, {1}) * -1);
    chi1.add_at(2, vxy({1}, {}));
    CHECK(char_poly_thagomizer(1) == chi1);

    CHECK(dimension_poly(char_poly_thagomizer(2)) == IntPoly{-4, 8, -5, 1});

    // (t-1)(t-2)^n in dimensions, all n up to 8.
    for (int n = 0; n <= 8; ++n) {
        IntPoly expect{-1, 1};
        for (int i = 0; i < n; ++i) expect = expect * IntPoly{-2, 1};
        CHECK(dimension_poly(char_poly_thagomizer(n)) == expect);
    }
}

TEST_CASE("zeta-like recursion interlocks h, the characteristic family and t-powers") {
    // t^(n+1) h_n[X] = t^n h_n[X] + sum_k h_k[X+Y] chi_(n-k).
    for (int n = 0; n <= 6; ++n) {
        GradedBiSchur lhs = GradedBiSchur::term(n + 1, x_only(h_gen(n)));
        GradedBiSchur rhs = GradedBiSchur::term(n, x_only(h_gen(n)));
        for (int k = 0; k <= n; ++k)
            rhs += GradedBiSchur::constant(h_sum_alphabets(k)) * char_poly_thagomizer(n - k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("single-alphabet form and the two-alphabet convolution form") {
    CHECK(p_type_a(0) == GradedBiSchur::constant(BiSchurPoly::one()));
    CHECK(p_type_a(1) == GradedBiSchur::constant(vxy({1}, {})));

    GradedBiSchur pa2;
    pa2.add_at(0, vxy({2}, {}));
    pa2.add_at(1, vxy({2}, {}));
    CHECK(p_type_a(2) == pa2);

    GradedBiSchur pa3;
    pa3.add_at(0, vxy({3}, {}));
    pa3.add_at(1, vxy({3}, {}) * 2 + vxy({2, 1}, {}));
    CHECK(p_type_a(3) == pa3);

    for (int n = 0; n <= 6; ++n) {
        CHECK(dimension_poly(p_type_a(n)) == dimension_poly(p_thagomizer(n)));
        // The Y-alphabet convolution form is the kl closed form, term by term.
        CHECK(r_cycle_form(n) == p_thagomizer(n));
    }
}

TEST_CASE("kl families are multiplicity-free with bounded degree") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(is_multiplicity_free(p_thagomizer(n)));
        CHECK(is_multiplicity_free(q_thagomizer(n)));
        CHECK(2 * p_thagomizer(n).degree() <= n);
        CHECK(2 * q_thagomizer(n).degree() <= n);
    }
    for (int k = 2; k <= 12; ++k) {
        CHECK(is_multiplicity_free(c_cycle(k)));
        CHECK(2 * c_cycle(k).degree() <= k - 2);
    }
}

TEST_CASE("series identities hold at multiple truncation orders") {
    for (int order : {2, 3, 6}) {
        SeriesReport r = verify_series_identities(order);
        CHECK(r.order == order);
        CHECK(r.checks.size() == 6);
        for (const SeriesCheck& c : r.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
        CHECK(r.all_pass());
    }
    CHECK_THROWS_AS(verify_series_identities(1), std::invalid_argument);
    CHECK_THROWS_AS(verify_series_identities(13), std::invalid_argument);
}
