#pragma once

#include <cstddef>
#include <functional>

namespace klrcell {

// Global switch for the OpenMP kernels. Tests and the benchmark flip this to
// compare the parallel path against the serial reference loop; results must
// be identical because every body writes to its own slot.
bool& parallel_enabled();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace klrcell
