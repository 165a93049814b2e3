#include "thag/positivity.hpp"

#include "thag/closed_forms.hpp"

#include <doctest.h>

#include <stdexcept>
#include <tuple>

using namespace thag;

namespace {

BiSchurPoly vxy(std::vector<int> x, std::vector<int> y) {
    return BiSchurPoly::term({Partition(std::move(x)), Partition(std::move(y))});
}

} // namespace

TEST_CASE("negative-coefficient witnesses scan in display order") {
    CHECK(is_schur_positive(GradedBiSchur()));
    CHECK(is_schur_positive(p_thagomizer(6)));
    CHECK(is_schur_positive(GradedBiSchur::constant(h_sum_alphabets(3))));

    // The characteristic polynomial is honestly virtual; the first offender
    // in (t ascending, descending shape) order is -2 V_{(1),()} at t^1.
    auto w = schur_negative_witness(char_poly_thagomizer(1));
    REQUIRE(w.has_value());
    CHECK(w->t_degree == 1);
    CHECK(w->shape == Bipartition{Partition({1}), Partition()});
    CHECK(w->coeff == -2);

    GradedBiSchur g;
    g.add_at(0, vxy({2}, {}) - vxy({1, 1}, {}) * 3);
    auto w2 = schur_negative_witness(g);
    REQUIRE(w2.has_value());
    CHECK(w2->t_degree == 0);
    CHECK(w2->shape == Bipartition{Partition({1, 1}), Partition()});
    CHECK(w2->coeff == -3);
    CHECK_FALSE(is_schur_positive(g));
}

TEST_CASE("multiplicity witnesses") {
    CHECK(is_multiplicity_free(p_thagomizer(8)));
    CHECK(is_multiplicity_free(GradedBiSchur()));

    auto w = multiplicity_witness(GradedBiSchur::constant(e_doubled(2)));
    REQUIRE(w.has_value());
    CHECK(w->t_degree == 0);
    CHECK(w->shape == Bipartition{Partition({1, 1}), Partition()});
    CHECK(w->coeff == 3);

    // Negative entries are multiplicities too.
    auto w2 = multiplicity_witness(GradedBiSchur::constant(vxy({1}, {}) * -1));
    REQUIRE(w2.has_value());
    CHECK(w2->coeff == -1);
}

TEST_CASE("log-concavity difference at explicit small cases") {
    // P_2 = s_(2)[X] + t s_(2)[Y]: C_1^2 - C_0 C_2 = s_(2)[Y]^2.
    BiSchurPoly d = ilc_difference(2, 1, 1, IlcVariant::P);
    BiSchurPoly expect = vxy({}, {4}) + vxy({}, {3, 1}) + vxy({}, {2, 2});
    CHECK(d == expect);

    // Degenerate rows are Schur positive outright.
    CHECK(is_schur_positive(GradedBiSchur::constant(ilc_difference(1, 1, 1, IlcVariant::P))));
    CHECK(ilc_difference(1, 1, 1, IlcVariant::P).is_zero());

    // Every difference is homogeneous of total size 2n (or zero).
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; 2 * i <= n; ++i) {
            for (int j = i; 2 * j <= n; ++j) {
                for (IlcVariant v : {IlcVariant::P, IlcVariant::Q}) {
                    BiSchurPoly diff = ilc_difference(n, i, j, v);
                    if (!diff.is_zero()) CHECK(diff.homogeneous_degree() == 2 * n);
                }
            }
        }
    }

    CHECK_THROWS_AS(ilc_difference(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ilc_difference(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ilc_difference(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("log-concavity sweep is exhaustive, ordered, and clean") {
    IlcReport r = verify_strong_ilc(4, IlcVariant::P);
    CHECK(r.max_n == 4);
    CHECK(r.strong);
    CHECK(r.failures == 0);
    // Cells: n=2 (1,1); n=3 (1,1); n=4 (1,1),(1,2),(2,2).
    REQUIRE(r.entries.size() == 5);
    CHECK(r.entries[0].n == 2);
    CHECK(r.entries[4].n == 4);
    CHECK(r.entries[4].i == 2);
    CHECK(r.entries[4].j == 2);
    for (size_t idx = 1; idx < r.entries.size(); ++idx) {
        const IlcEntry &a = r.entries[idx - 1], &b = r.entries[idx];
        CHECK(std::tuple(a.n, a.i, a.j) < std::tuple(b.n, b.i, b.j));
    }
    for (const IlcEntry& e : r.entries) {
        CHECK(e.positive);
        CHECK_FALSE(e.witness.has_value());
        CHECK(e.classification.empty());
    }

    IlcReport weak = verify_ilc(6, IlcVariant::Q, false);
    CHECK_FALSE(weak.strong);
    CHECK(weak.failures == 0);
    for (const IlcEntry& e : weak.entries) CHECK(e.i == e.j);

    // Diagonal cells are a subset of the strong sweep.
    IlcReport strong = verify_ilc(6, IlcVariant::Q, true);
    CHECK(strong.entries.size() > weak.entries.size());
    CHECK(strong.failures == 0);

    CHECK_THROWS_AS(verify_strong_ilc(11, IlcVariant::P), std::invalid_argument);
    CHECK_THROWS_AS(verify_strong_ilc(-1, IlcVariant::P), std::invalid_argument);
}
