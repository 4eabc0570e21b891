#pragma once

#include <cstddef>
#include <functional>

namespace a2 {

// Worker count from an explicit request, else A2SHIFT_JOBS, else hardware
// concurrency. Always >= 1.
unsigned resolve_jobs(unsigned requested);

// Splits [0, count) into `jobs` contiguous ranges and runs fn(begin, end) on
// each in its own thread. Callers write results into per-index slots so the
// merged output does not depend on the job count.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t begin, std::size_t end)>& fn);

}  // namespace a2
