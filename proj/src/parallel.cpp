#include "klrcell/parallel.hpp"

namespace klrcell {

bool& parallel_enabled() {
    static bool on = true;
    return on;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (!parallel_enabled()) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace klrcell
