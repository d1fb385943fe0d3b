#include "loopalg/kernels.hpp"

namespace loopalg {

void set_worker_count(int workers) {
#ifdef _OPENMP
  omp_set_num_threads(workers > 0 ? workers : omp_get_num_procs());
#else
  (void)workers;
#endif
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace loopalg
