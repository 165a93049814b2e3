// Timing harness comparing the serial reference kernels against the OpenMP
// paths on workloads shaped like the real computations: large two-alphabet
// products and the induced-log-concavity sweep.
#include "thag/bischur.hpp"
#include "thag/closed_forms.hpp"
#include "thag/parallel.hpp"
#include "thag/positivity.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace thag;

namespace {

double time_median_ms(int reps, const std::function<void()>& body) {
    std::vector<double> samples;
    samples.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        samples.push_back(
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

struct ProductCase {
    std::string name;
    BiSchurPoly a;
    BiSchurPoly b;
};

} // namespace

int main() {
    std::printf("openmp compiled in: %s, threads: %d\n", built_with_openmp() ? "yes" : "no",
                parallel_thread_count());

    std::vector<ProductCase> cases;
    cases.push_back({"h7[X+Y] * e6[X+Y]", h_sum_alphabets(7), e_sum_alphabets(6)});
    cases.push_back({"h8[X+Y] * h8[X+Y]", h_sum_alphabets(8), h_sum_alphabets(8)});
    {
        const GradedBiSchur p = p_thagomizer(10);
        cases.push_back({"P10[t^1] * P10[t^2]", p.coefficient(1), p.coefficient(2)});
        const GradedBiSchur q = q_thagomizer(10);
        cases.push_back({"Q10[t^0] * Q10[t^1]", q.coefficient(0), q.coefficient(1)});
    }

    const int reps = 5;
    std::printf("\n%-22s %10s %10s   %s\n", "product", "serial/ms", "openmp/ms", "terms");
    for (const ProductCase& c : cases) {
        BiSchurPoly out_serial, out_parallel;
        const double ms_serial =
            time_median_ms(reps, [&] { out_serial = bi_multiply_serial(c.a, c.b); });
        const double ms_parallel =
            time_median_ms(reps, [&] { out_parallel = bi_multiply_parallel(c.a, c.b); });
        const bool same = out_serial == out_parallel;
        std::printf("%-22s %10.3f %10.3f   %zu%s\n", c.name.c_str(), ms_serial, ms_parallel,
                    out_serial.terms().size(), same ? "" : "  MISMATCH");
        if (!same) return 1;
    }

    std::printf("\n%-22s %10s %10s\n", "ilc sweep", "serial/ms", "openmp/ms");
    for (int max_n : {6, 8}) {
        set_parallel_enabled(false);
        long long failures_serial = 0;
        const double ms_serial = time_median_ms(3, [&] {
            failures_serial = verify_strong_ilc(max_n, IlcVariant::P).failures;
        });
        set_parallel_enabled(true);
        long long failures_parallel = 0;
        const double ms_parallel = time_median_ms(3, [&] {
            failures_parallel = verify_strong_ilc(max_n, IlcVariant::P).failures;
        });
        const std::string name = "strong P, n <= " + std::to_string(max_n);
        std::printf("%-22s %10.3f %10.3f%s\n", name.c_str(), ms_serial, ms_parallel,
                    failures_serial == failures_parallel ? "" : "  MISMATCH");
        if (failures_serial != failures_parallel) return 1;
    }
    return 0;
}
