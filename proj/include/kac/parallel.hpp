#pragma once

#include <cstddef>
#include <functional>

namespace kac {

// Global cap on worker threads (default: hardware concurrency).
void set_worker_cap(int n);
int worker_count();

// Runs fn(i) for i in [0, n) on worker_count() threads, contiguous chunks.
// fn must only write to slots owned by its own index; exceptions propagate
// from the first failing index.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

} // namespace kac
