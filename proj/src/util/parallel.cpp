#include "npelab/util/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace npelab {

namespace {
std::atomic<unsigned> g_threads{0};

unsigned effective_threads() {
    unsigned n = g_threads.load();
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}
}  // namespace

void set_num_threads(unsigned n) { g_threads.store(n); }
unsigned num_threads() { return effective_threads(); }

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn) {
    const std::size_t n = end > begin ? end - begin : 0;
    if (n == 0) return;
    const unsigned nt = std::min<std::size_t>(effective_threads(), n);
    if (nt <= 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= end) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nt - 1);
    for (unsigned t = 0; t + 1 < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

double parallel_reduce(std::size_t n,
                       const std::function<double(std::size_t, std::size_t)>& chunk_sum) {
    if (n == 0) return 0.0;
    // Chunk layout depends only on n, so the summation order is fixed.
    const std::size_t chunk = std::max<std::size_t>(1, (n + 255) / 256);
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_for(0, nchunks, [&](std::size_t c) {
        const std::size_t lo = c * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        partial[c] = chunk_sum(lo, hi);
    });
    double acc = 0.0;
    for (double v : partial) acc += v;
    return acc;
}

}  // namespace npelab
