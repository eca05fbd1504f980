#pragma once

#include <cstdint>
#include <functional>

namespace crystal1d {

/// Worker-thread cap: the CRYSTAL1D_THREADS environment variable when it
/// parses to a positive integer, otherwise the hardware concurrency (at
/// least 1).
int worker_count();

/// Splits [0, n) into one contiguous chunk per worker and runs
/// body(chunk_begin, chunk_end, worker_index) on each, blocking until all
/// finish. With a single worker the body runs inline on the calling thread.
/// The first exception thrown by any chunk is rethrown after all workers
/// join. Chunk boundaries depend only on n and the worker count, so
/// reductions that merge per-worker results in worker-index order are
/// deterministic.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, int)>& body);

}  // namespace crystal1d
