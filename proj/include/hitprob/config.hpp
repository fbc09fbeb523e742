#pragma once

#include <cstddef>
#include <functional>

namespace hitprob {

// Worker-thread count used by the elimination engine and row generators.
// Defaults to HITPROB_THREADS if set, else std::thread::hardware_concurrency().
// All public results are bit-identical for every thread count.
std::size_t thread_count();
void set_thread_count(std::size_t t);

// Runs fn(begin, end) over disjoint chunks of [0, n), possibly on several
// threads. Blocks until every chunk is done.
void parallel_for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hitprob
