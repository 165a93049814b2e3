#include "thag/schur.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

using namespace thag;

namespace {

// Independent numeric oracle: evaluate s_p(x_1..x_m) by backtracking over
// semistandard tableaux (weakly increasing rows, strictly increasing
// columns), summing the monomial x^content of each.
long long ssyt_eval(const Partition& p, const std::vector<long long>& x) {
    if (p.empty()) return 1;
    const int m = (int)x.size();
    std::vector<std::vector<int>> t((size_t)p.length());
    for (int r = 0; r < p.length(); ++r) t[(size_t)r].assign((size_t)p.part(r), 0);
    std::function<long long(int, int)> go = [&](int r, int c) -> long long {
        if (r == p.length()) return 1;
        int nr = r, nc = c + 1;
        if (nc >= p.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[(size_t)r][(size_t)c - 1]);
        if (r > 0) lo = std::max(lo, t[(size_t)r - 1][(size_t)c] + 1);
        long long sum = 0;
        for (int v = lo; v <= m; ++v) {
            t[(size_t)r][(size_t)c] = v;
            sum += x[(size_t)v - 1] * go(nr, nc);
        }
        t[(size_t)r][(size_t)c] = 0;
        return sum;
    };
    return go(0, 0);
}

long long eval_poly(const SchurPoly& f, const std::vector<long long>& x) {
    long long sum = 0;
    for (const auto& [shape, coeff] : f.terms()) sum += coeff * ssyt_eval(shape, x);
    return sum;
}

// All partitions obtained from p by adding a horizontal r-strip (at most one
// new box per column), i.e. mu with mu_1 >= p_1 >= mu_2 >= p_2 >= ...
std::vector<Partition> horizontal_strip_adds(const Partition& p, int r) {
    std::vector<Partition> out;
    std::vector<int> mu((size_t)p.length() + 1, 0);
    std::function<void(int, int)> go = [&](int row, int left) {
        if (row == (int)mu.size()) {
            if (left == 0) {
                std::vector<int> parts(mu.begin(), mu.end());
                out.push_back(Partition(parts));
            }
            return;
        }
        const int base = p.part(row);
        const int cap = row == 0 ? base + left : p.part(row - 1);
        for (int v = base; v <= std::min(cap, base + left); ++v) {
            mu[(size_t)row] = v;
            go(row + 1, left - (v - base));
        }
        mu[(size_t)row] = 0;
    };
    go(0, r);
    return out;
}

std::vector<Partition> vertical_strip_adds(const Partition& p, int r) {
    std::vector<Partition> out;
    for (const Partition& q : horizontal_strip_adds(conjugate(p), r)) out.push_back(conjugate(q));
    return out;
}

Partition random_partition(std::mt19937& rng, int max_size) {
    int n = (int)(rng() % (unsigned)(max_size + 1));
    auto ps = partitions_of(n);
    return ps[rng() % ps.size()];
}

} // namespace

TEST_CASE("generators and trivial products") {
    CHECK(h_gen(0) == SchurPoly::one());
    CHECK(h_gen(3) == SchurPoly::term(Partition({3})));
    CHECK(e_gen(3) == SchurPoly::term(Partition({1, 1, 1})));
    CHECK(schur_multiply(SchurPoly::one(), h_gen(4)) == h_gen(4));
    CHECK(schur_multiply(h_gen(0), SchurPoly()) == SchurPoly());
}

TEST_CASE("frozen small products") {
    SchurPoly s1 = SchurPoly::term(Partition({1}));
    SchurPoly sq = schur_multiply(s1, s1);
    SchurPoly expect;
    expect.add_term(Partition({2}), 1);
    expect.add_term(Partition({1, 1}), 1);
    CHECK(sq == expect);

    SchurPoly s2 = SchurPoly::term(Partition({2}));
    SchurPoly s2s2;
    s2s2.add_term(Partition({4}), 1);
    s2s2.add_term(Partition({3, 1}), 1);
    s2s2.add_term(Partition({2, 2}), 1);
    CHECK(schur_multiply(s2, s2) == s2s2);

    // The classic multiplicity-2 product.
    SchurPoly s21 = SchurPoly::term(Partition({2, 1}));
    SchurPoly prod = schur_multiply(s21, s21);
    SchurPoly expect21;
    expect21.add_term(Partition({4, 2}), 1);
    expect21.add_term(Partition({4, 1, 1}), 1);
    expect21.add_term(Partition({3, 3}), 1);
    expect21.add_term(Partition({3, 2, 1}), 2);
    expect21.add_term(Partition({3, 1, 1, 1}), 1);
    expect21.add_term(Partition({2, 2, 2}), 1);
    expect21.add_term(Partition({2, 2, 1, 1}), 1);
    CHECK(prod == expect21);

    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
}

TEST_CASE("products match the Pieri strip enumeration") {
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& p : partitions_of(n)) {
            for (int r = 0; r <= 4; ++r) {
                SchurPoly h_expect, e_expect;
                for (const Partition& q : horizontal_strip_adds(p, r)) h_expect.add_term(q, 1);
                for (const Partition& q : vertical_strip_adds(p, r)) e_expect.add_term(q, 1);
                CHECK(schur_multiply(SchurPoly::term(p), h_gen(r)) == h_expect);
                CHECK(schur_multiply(SchurPoly::term(p), e_gen(r)) == e_expect);
            }
        }
    }
}

TEST_CASE("products match numeric evaluation in eight variables") {
    std::vector<long long> x = {1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<Partition> shapes;
    for (int n = 0; n <= 4; ++n)
        for (const Partition& p : partitions_of(n)) shapes.push_back(p);
    for (const Partition& a : shapes) {
        for (const Partition& b : shapes) {
            SchurPoly prod = schur_multiply(SchurPoly::term(a), SchurPoly::term(b));
            CHECK(eval_poly(prod, x) == ssyt_eval(a, x) * ssyt_eval(b, x));
        }
    }
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(20240816);
    for (int trial = 0; trial < 24; ++trial) {
        SchurPoly a = SchurPoly::term(random_partition(rng, 6), (long long)(rng() % 5) - 2);
        SchurPoly b = SchurPoly::term(random_partition(rng, 6));
        SchurPoly c = SchurPoly::term(random_partition(rng, 4));
        a.add_term(random_partition(rng, 5), 1 + (long long)(rng() % 3));
        b.add_term(random_partition(rng, 5), -1);
        CHECK(schur_multiply(a, b) == schur_multiply(b, a));
        CHECK(schur_multiply(schur_multiply(a, b), c) == schur_multiply(a, schur_multiply(b, c)));
    }
}

TEST_CASE("alternating h-e convolution vanishes") {
    for (int n = 1; n <= 10; ++n) {
        SchurPoly sum;
        for (int i = 0; i <= n; ++i) {
            SchurPoly term = schur_multiply(e_gen(i), h_gen(n - i));
            if (i % 2) term = term * -1;
            sum += term;
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("poly container semantics") {
    SchurPoly f;
    f.add_term(Partition({2}), 3);
    f.add_term(Partition({2}), -3);
    CHECK(f.is_zero());
    f.add_term(Partition({1}), 2);
    CHECK(f.homogeneous_degree() == 1);
    f.add_term(Partition({2}), 1);
    CHECK_FALSE(f.homogeneous_degree().has_value());
    CHECK(SchurPoly().homogeneous_degree() == 0);

    SchurPoly g = f;
    g -= f;
    CHECK(g.is_zero());
    CHECK((f * 0).is_zero());
    CHECK(f * 2 == f + f);
}
