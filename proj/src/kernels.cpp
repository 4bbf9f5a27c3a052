#include "normvol/kernels.hpp"

#include <atomic>

namespace normvol {

namespace {
std::atomic<Exec> g_default_exec{Exec::parallel};
}

Exec default_exec() { return g_default_exec.load(std::memory_order_relaxed); }

void set_default_exec(Exec exec) { g_default_exec.store(exec, std::memory_order_relaxed); }

int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_parallel_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

}  // namespace normvol
