#include "thag/bischur.hpp"

#include "thag/ints.hpp"
#include "thag/parallel.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thag {

BiSchurPoly BiSchurPoly::term(Bipartition shape, long long coeff) {
    BiSchurPoly p;
    p.add_term(shape, coeff);
    return p;
}

void BiSchurPoly::add_term(const Bipartition& shape, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(shape);
    if (it == terms_.end()) {
        terms_.emplace(shape, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

std::optional<int> BiSchurPoly::homogeneous_degree() const {
    int deg = 0;
    bool first = true;
    for (const auto& [shape, c] : terms_) {
        if (first) { deg = shape.size(); first = false; }
        else if (shape.size() != deg) return std::nullopt;
    }
    return deg;
}

BiSchurPoly& BiSchurPoly::operator+=(const BiSchurPoly& o) {
    for (const auto& [shape, c] : o.terms_) add_term(shape, c);
    return *this;
}

BiSchurPoly& BiSchurPoly::operator-=(const BiSchurPoly& o) {
    for (const auto& [shape, c] : o.terms_) add_term(shape, -c);
    return *this;
}

BiSchurPoly BiSchurPoly::operator*(long long c) const {
    BiSchurPoly out;
    if (c == 0) return out;
    for (const auto& [shape, k] : terms_) out.terms_.emplace(shape, checked_mul(k, c));
    return out;
}

namespace {

void accumulate_pair_product(BiSchurPoly& out, const Bipartition& a, long long ca,
                             const Bipartition& b, long long cb) {
    long long c = checked_mul(ca, cb);
    const auto& xs = lr_expand_pair(a.x, b.x);
    const auto& ys = lr_expand_pair(a.y, b.y);
    for (const auto& [sx, mx] : xs) {
        long long cx = checked_mul(c, mx);
        for (const auto& [sy, my] : ys)
            out.add_term(Bipartition{sx, sy}, checked_mul(cx, my));
    }
}

} // namespace

BiSchurPoly bi_multiply_serial(const BiSchurPoly& a, const BiSchurPoly& b) {
    BiSchurPoly out;
    for (const auto& [sa, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms())
            accumulate_pair_product(out, sa, ca, sb, cb);
    return out;
}

BiSchurPoly bi_multiply_parallel(const BiSchurPoly& a, const BiSchurPoly& b) {
#ifdef _OPENMP
    using TermRef = std::pair<const std::pair<const Bipartition, long long>*,
                              const std::pair<const Bipartition, long long>*>;
    std::vector<TermRef> pairs;
    pairs.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) pairs.emplace_back(&ta, &tb);

    BiSchurPoly out;
    std::exception_ptr error;       // written once, by whoever wins `failed`
    std::atomic<bool> failed{false};
    auto capture = [&] {
        if (!failed.exchange(true)) error = std::current_exception();
    };
#pragma omp parallel
    {
        BiSchurPoly local;
#pragma omp for schedule(dynamic, 8) nowait
        for (long i = 0; i < (long)pairs.size(); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                accumulate_pair_product(local, pairs[(size_t)i].first->first,
                                        pairs[(size_t)i].first->second,
                                        pairs[(size_t)i].second->first,
                                        pairs[(size_t)i].second->second);
            } catch (...) {
#pragma omp critical(thag_bimul_err)
                capture();
            }
        }
#pragma omp critical(thag_bimul_merge)
        {
            try {
                if (!failed.load(std::memory_order_relaxed)) out += local;
            } catch (...) {
                capture();
            }
        }
    }
    if (failed.load()) std::rethrow_exception(error);
    return out;
#else
    return bi_multiply_serial(a, b);
#endif
}

BiSchurPoly bi_multiply(const BiSchurPoly& a, const BiSchurPoly& b) {
    size_t pairs = a.terms().size() * b.terms().size();
#ifdef _OPENMP
    if (parallel_enabled() && pairs >= 64 && !omp_in_parallel())
        return bi_multiply_parallel(a, b);
#else
    (void)pairs;
#endif
    return bi_multiply_serial(a, b);
}

BiSchurPoly operator*(const BiSchurPoly& a, const BiSchurPoly& b) {
    return bi_multiply(a, b);
}

BiSchurPoly x_only(const SchurPoly& p) {
    BiSchurPoly out;
    for (const auto& [shape, c] : p.terms()) out.add_term(Bipartition{shape, {}}, c);
    return out;
}

BiSchurPoly y_only(const SchurPoly& p) {
    BiSchurPoly out;
    for (const auto& [shape, c] : p.terms()) out.add_term(Bipartition{{}, shape}, c);
    return out;
}

BiSchurPoly h_sum_alphabets(int n) {
    if (n < 0) throw std::invalid_argument("h_sum_alphabets: negative degree");
    BiSchurPoly out;
    for (int a = 0; a <= n; ++a)
        out.add_term(Bipartition{Partition::row(a), Partition::row(n - a)}, 1);
    return out;
}

BiSchurPoly e_sum_alphabets(int n) {
    if (n < 0) throw std::invalid_argument("e_sum_alphabets: negative degree");
    BiSchurPoly out;
    for (int a = 0; a <= n; ++a)
        out.add_term(Bipartition{Partition::column(a), Partition::column(n - a)}, 1);
    return out;
}

BiSchurPoly e_doubled(int n) {
    if (n < 0) throw std::invalid_argument("e_doubled: negative degree");
    BiSchurPoly out;
    for (int a = 0; a <= n; ++a) {
        // e_a[X] e_b[X] expanded once in Lambda(X), then tensored with e_c[Y].
        for (int b = 0; a + b <= n; ++b) {
            int c = n - a - b;
            const auto& xs = lr_expand_pair(Partition::column(a), Partition::column(b));
            for (const auto& [sx, mx] : xs)
                out.add_term(Bipartition{sx, Partition::column(c)}, mx);
        }
    }
    return out;
}

GradedBiSchur GradedBiSchur::constant(BiSchurPoly c) { return term(0, std::move(c)); }

GradedBiSchur GradedBiSchur::term(int t_degree, BiSchurPoly c) {
    GradedBiSchur g;
    g.add_at(t_degree, c);
    return g;
}

void GradedBiSchur::add_at(int t_degree, const BiSchurPoly& c) {
    if (t_degree < 0)
        throw std::invalid_argument("GradedBiSchur: negative t-degree");
    if (c.is_zero()) return;
    auto it = coeffs_.find(t_degree);
    if (it == coeffs_.end()) {
        coeffs_.emplace(t_degree, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

const BiSchurPoly& GradedBiSchur::coefficient(int t_degree) const {
    static const BiSchurPoly zero;
    auto it = coeffs_.find(t_degree);
    return it == coeffs_.end() ? zero : it->second;
}

int GradedBiSchur::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

GradedBiSchur& GradedBiSchur::operator+=(const GradedBiSchur& o) {
    for (const auto& [k, c] : o.coeffs_) add_at(k, c);
    return *this;
}

GradedBiSchur& GradedBiSchur::operator-=(const GradedBiSchur& o) {
    for (const auto& [k, c] : o.coeffs_) add_at(k, c * -1);
    return *this;
}

GradedBiSchur operator*(const GradedBiSchur& a, const GradedBiSchur& b) {
    GradedBiSchur out;
    for (const auto& [ka, ca] : a.coefficients())
        for (const auto& [kb, cb] : b.coefficients()) out.add_at(ka + kb, ca * cb);
    return out;
}

GradedBiSchur GradedBiSchur::operator*(long long c) const {
    GradedBiSchur out;
    if (c == 0) return out;
    for (const auto& [k, p] : coeffs_) out.coeffs_.emplace(k, p * c);
    return out;
}

GradedBiSchur GradedBiSchur::shifted(int dt) const {
    if (dt < 0) throw std::invalid_argument("GradedBiSchur::shifted: negative shift");
    GradedBiSchur out;
    for (const auto& [k, p] : coeffs_) out.coeffs_.emplace(k + dt, p);
    return out;
}

IntPoly dimension_poly(const GradedBiSchur& g) {
    int common = -1;
    IntPoly out;
    for (const auto& [k, poly] : g.coefficients()) {
        auto deg = poly.homogeneous_degree();
        if (!deg)
            throw std::invalid_argument(
                "dimension_poly: coefficient mixes total degrees");
        if (common == -1) common = *deg;
        else if (*deg != common)
            throw std::invalid_argument(
                "dimension_poly: t-coefficients of different total degrees");
        long long d = 0;
        for (const auto& [shape, c] : poly.terms())
            d = checked_add(d, checked_mul(c, bipartition_dimension(shape)));
        out += IntPoly::monomial(k, d);
    }
    return out;
}

bool is_palindromic(const GradedBiSchur& g, int r) {
    if (r < 0) return g.is_zero();
    if (g.degree() > r) return false;
    for (int k = 0; k <= r - k; ++k)
        if (!(g.coefficient(k) == g.coefficient(r - k))) return false;
    return true;
}

GradedBiSchur h_twisted(int n) {
    if (n < 0) throw std::invalid_argument("h_twisted: negative degree");
    GradedBiSchur out;
    for (int j = 0; j <= n; ++j) {
        long long sign_y = ((n - j) % 2 == 0) ? 1 : -1;
        SchurPoly ey = e_gen(n - j);
        for (int b = 0; b <= j; ++b) {
            long long sign_x = ((j - b) % 2 == 0) ? 1 : -1;
            SchurPoly x = h_gen(b) * e_gen(j - b);
            BiSchurPoly cell;
            for (const auto& [sx, cx] : x.terms())
                for (const auto& [sy, cy] : ey.terms())
                    cell.add_term(Bipartition{sx, sy},
                                  checked_mul(cx, cy) * sign_x * sign_y);
            out.add_at(b, cell);
        }
    }
    return out;
}

} // namespace thag
