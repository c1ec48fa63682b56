#ifndef FOLCUP_PARALLEL_HPP
#define FOLCUP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace folcup {

/* Worker count for the embarrassingly parallel per-bidegree loops. Defaults
 * to FOLCUP_THREADS when set, else 1. All parallel work is read-only on the
 * shared structures; results are merged in task order, so output stays
 * deterministic for any thread count. */
int thread_count();
void set_thread_count(int n);

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace folcup

#endif
