#pragma once

#include <cstddef>

namespace tlab {

// Which kernel implementation a call should use. `Serial` is the reference
// path kept for testing; `Par` is the OpenMP path. Both produce bit-identical
// results: parallel loops only ever touch disjoint elements, and reductions
// use a fixed block decomposition that does not depend on the thread count.
enum class Exec { Serial, Par };

namespace parallel {

// Process-wide default used by the dispatching wrappers in kernels.hpp.
Exec default_exec();
void set_default_exec(Exec e);

// Caps the OpenMP worker count (CLI --jobs). No-op without OpenMP.
void set_max_threads(int n);
int max_threads();

// Block size for deterministic reductions. Partial sums are computed per
// block and combined in block order, so the result is independent of how
// blocks are assigned to threads.
inline constexpr std::size_t reduction_block = 4096;

} // namespace parallel
} // namespace tlab
