#include "thag/positivity.hpp"

#include "thag/closed_forms.hpp"
#include "thag/oracle.hpp"
#include "thag/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thag {

namespace {

// Scans in canonical display order: t ascending, then bipartitions by
// descending (lambda, mu), and reports the first coefficient failing `bad`.
std::optional<PositivityWitness> scan_witness(
    const GradedBiSchur& g, const std::function<bool(long long)>& bad) {
    for (const auto& [t_deg, poly] : g.coefficients()) {
        const auto& terms = poly.terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (bad(it->second)) return PositivityWitness{t_deg, it->first, it->second};
        }
    }
    return std::nullopt;
}

GradedBiSchur family_poly(int n, IlcVariant variant) {
    return variant == IlcVariant::P ? p_thagomizer(n) : q_thagomizer(n);
}

GradedBiSchur family_poly_oracle(int n, IlcVariant variant) {
    return variant == IlcVariant::P ? p_thagomizer_oracle(n) : q_thagomizer_oracle(n);
}

BiSchurPoly ilc_difference_of(const GradedBiSchur& f, int i, int j) {
    return f.coefficient(i) * f.coefficient(j) - f.coefficient(i - 1) * f.coefficient(j + 1);
}

} // namespace

std::optional<PositivityWitness> schur_negative_witness(const GradedBiSchur& g) {
    return scan_witness(g, [](long long c) { return c < 0; });
}

bool is_schur_positive(const GradedBiSchur& g) {
    return !schur_negative_witness(g).has_value();
}

std::optional<PositivityWitness> multiplicity_witness(const GradedBiSchur& g) {
    return scan_witness(g, [](long long c) { return c != 0 && c != 1; });
}

bool is_multiplicity_free(const GradedBiSchur& g) {
    return !multiplicity_witness(g).has_value();
}

BiSchurPoly ilc_difference(int n, int i, int j, IlcVariant variant) {
    if (n < 0) throw std::invalid_argument("ilc_difference: n must be nonnegative");
    if (i < 1 || i > j) throw std::invalid_argument("ilc_difference: need 1 <= i <= j");
    return ilc_difference_of(family_poly(n, variant), i, j);
}

IlcReport verify_ilc(int max_n, IlcVariant variant, bool strong) {
    if (max_n < 0 || max_n > 10)
        throw std::invalid_argument("verify_ilc: max_n must be in [0, 10]");

    IlcReport report;
    report.max_n = max_n;
    report.variant = variant;
    report.strong = strong;

    std::vector<GradedBiSchur> family(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) family[static_cast<size_t>(n)] = family_poly(n, variant);

    struct Cell {
        int n, i, j;
    };
    std::vector<Cell> cells;
    for (int n = 0; n <= max_n; ++n) {
        for (int i = 1; i <= n / 2; ++i) {
            for (int j = i; j <= n / 2; ++j) {
                if (!strong && j != i) continue;
                cells.push_back({n, i, j});
            }
        }
    }

    report.entries.resize(cells.size());
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    auto run_cell = [&](size_t idx) {
        try {
            const Cell& c = cells[idx];
            IlcEntry e;
            e.n = c.n;
            e.i = c.i;
            e.j = c.j;
            e.variant = variant;
            GradedBiSchur diff =
                GradedBiSchur::constant(ilc_difference_of(family[static_cast<size_t>(c.n)], c.i, c.j));
            e.witness = schur_negative_witness(diff);
            e.positive = !e.witness.has_value();
            report.entries[idx] = std::move(e);
        } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
        }
    };

#ifdef _OPENMP
    if (parallel_enabled() && !omp_in_parallel()) {
        const long long count = static_cast<long long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (long long idx = 0; idx < count; ++idx) {
            if (failed.load(std::memory_order_relaxed)) continue;
            run_cell(static_cast<size_t>(idx));
        }
    } else {
        for (size_t idx = 0; idx < cells.size(); ++idx) run_cell(idx);
    }
#else
    for (size_t idx = 0; idx < cells.size(); ++idx) run_cell(idx);
#endif
    if (failed.load()) std::rethrow_exception(error);

    // Any failure is recomputed from scratch through the independent recursion
    // before it may be called a counterexample.
    for (IlcEntry& e : report.entries) {
        if (e.positive) continue;
        ++report.failures;
        GradedBiSchur oracle = family_poly_oracle(e.n, variant);
        BiSchurPoly rediff = ilc_difference_of(oracle, e.i, e.j);
        auto rewitness = schur_negative_witness(GradedBiSchur::constant(rediff));
        e.classification = rewitness.has_value() ? "counterexample" : "implementation-error";
    }
    return report;
}

IlcReport verify_strong_ilc(int max_n, IlcVariant variant) {
    return verify_ilc(max_n, variant, true);
}

} // namespace thag
