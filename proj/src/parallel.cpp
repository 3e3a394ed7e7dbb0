#include "dodgson/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dodgson {

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int hardware_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int resolve_threads(int requested) noexcept {
    if (requested <= 0) return hardware_threads();
    return requested;
}

}  // namespace dodgson
