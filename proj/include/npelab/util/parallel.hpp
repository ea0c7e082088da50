#pragma once
// Small worker-pool helper. Chunking is fixed by the problem size, not by
// the thread count, so reductions that sum per-chunk results in index order
// are bit-identical no matter how many workers run.

#include <cstddef>
#include <functional>
#include <vector>

namespace npelab {

// Global worker count (default: hardware concurrency). The CLI --threads
// flag sets this once at startup.
void set_num_threads(unsigned n);
unsigned num_threads();

// Runs fn(i) for i in [begin, end) across the pool.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

// Deterministic parallel reduction: splits [0, n) into fixed chunks,
// evaluates chunk sums in parallel, adds them in chunk order.
double parallel_reduce(std::size_t n,
                       const std::function<double(std::size_t, std::size_t)>& chunk_sum);

}  // namespace npelab
