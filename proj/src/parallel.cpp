#include "lebx/parallel.hpp"

#include <omp.h>

namespace lebx {

namespace {
const int kDefaultThreads = omp_get_max_threads();
}

int set_thread_count(int requested) {
    omp_set_num_threads(requested > 0 ? requested : kDefaultThreads);
    return omp_get_max_threads();
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace lebx
