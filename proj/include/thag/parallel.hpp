#pragma once

namespace thag {

// Global switch for the OpenMP code paths. Defaults to on when the library is
// built with OpenMP; the serial reference implementations are always available
// and are what the parallel kernels are tested against.
bool parallel_enabled();
void set_parallel_enabled(bool on);

// True when the library was compiled with OpenMP support.
bool built_with_openmp();

int parallel_thread_count();

} // namespace thag
