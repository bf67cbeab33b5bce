#include "tlab/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tlab::parallel {

namespace {
Exec g_exec = Exec::Par;
int g_max_threads = 0; // 0 = library default
} // namespace

Exec default_exec() { return g_exec; }
void set_default_exec(Exec e) { g_exec = e; }

void set_max_threads(int n)
{
    g_max_threads = n;
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads()
{
#ifdef _OPENMP
    return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace tlab::parallel
