#include "thag/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thag {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load(std::memory_order_relaxed);
#else
    return false;
#endif
}

void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

bool built_with_openmp() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int parallel_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace thag
