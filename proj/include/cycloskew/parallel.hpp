#pragma once

#include <cstddef>
#include <functional>

namespace cycloskew::parallel {

/// Worker count: CYCLOSKEW_JOBS if set, else the last set_jobs() value,
/// else hardware concurrency.
unsigned jobs();
void set_jobs(unsigned n);

/// Workers to use for n items of the given grain. Returns 1 inside a
/// parallel region so kernels never nest.
unsigned plan(std::size_t n, std::size_t grain = 4096);

/// Splits [0, n) into `workers` contiguous chunks; fn(begin, end, worker).
void for_chunks(std::size_t n, unsigned workers,
                const std::function<void(std::size_t, std::size_t, unsigned)>& fn);

/// Dynamic scheduling of n independent tasks; fn(index).
void for_tasks(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace cycloskew::parallel
